#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>

#include "g2eds/errors.hpp"

namespace g2eds {

/// Two-mode scalar: exact rational (default) or arbitrary-precision float.
///
/// Arithmetic never changes mode. Exact stays exact, float stays float at its
/// precision, and any mixed expression throws ModeError. The only way across
/// is the explicit to_floating(bits).
class Scalar {
 public:
  enum class Mode { exact, floating };

  Scalar() : v_(mpq_class(0)) {}

  static Scalar rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(std::move(c));
  }
  static Scalar integer(long n) { return Scalar(mpq_class(n)); }
  static Scalar fraction(long num, long den);
  static Scalar floating(const mpf_class& f) { return Scalar(f); }
  static Scalar floating(double x, int precision_bits) {
    return Scalar(mpf_class(x, precision_bits));
  }

  Mode mode() const {
    return std::holds_alternative<mpq_class>(v_) ? Mode::exact : Mode::floating;
  }
  bool is_exact() const { return mode() == Mode::exact; }
  int precision_bits() const {
    return is_exact() ? 0 : static_cast<int>(std::get<mpf_class>(v_).get_prec());
  }

  const mpq_class& rat() const;
  const mpf_class& flt() const;

  Scalar to_floating(int precision_bits) const;
  double to_double() const;

  bool is_zero() const;
  int sign() const;
  Scalar abs() const;
  Scalar inverse() const;

  /// Exact mode: the exact rational nth root, or NotRationalRoot if the value
  /// is not a perfect nth power. Float mode: Newton iteration at the value's
  /// precision. Odd n accepts negative input.
  Scalar nth_root(unsigned n) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar& operator*=(long k);
  Scalar& operator/=(long k);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator*(Scalar a, long k) { return a *= k; }
  friend Scalar operator*(long k, Scalar a) { return a *= k; }
  friend Scalar operator/(Scalar a, long k) { return a /= k; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }
  bool operator<(const Scalar& o) const;

  /// "n/d" (exact; "/d" omitted for integers) or a decimal string with enough
  /// digits for the precision (float).
  std::string str() const;
  static Scalar parse_exact(const std::string& s);
  static Scalar parse_floating(const std::string& s, int precision_bits);

 private:
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  explicit Scalar(mpf_class f) : v_(std::move(f)) {}
  void check_same_mode(const Scalar& o) const;

  std::variant<mpq_class, mpf_class> v_;
};

inline Scalar zero_like(const Scalar& x) {
  return x.is_exact() ? Scalar() : Scalar::floating(0.0, x.precision_bits());
}
inline Scalar one_like(const Scalar& x) {
  return x.is_exact() ? Scalar::integer(1) : Scalar::floating(1.0, x.precision_bits());
}
inline Scalar fraction_like(const Scalar& x, long num, long den) {
  if (x.is_exact()) return Scalar::fraction(num, den);
  mpf_class f(num, x.precision_bits());
  f /= den;
  return Scalar::floating(f);
}
inline const Scalar& value_part(const Scalar& x) { return x; }

}  // namespace g2eds
