#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "g2eds/scalar.hpp"

namespace g2eds {

// Monomials in u^1..u^7 of total degree <= 3 are enumerated by a fixed key:
//   0        -> 1
//   1..7     -> u^i
//   8..35    -> u^i u^j   (i <= j, lexicographic)
//   36..119  -> u^i u^j u^k (i <= j <= k, lexicographic)
// Degree 3 exists only as scratch for jet generators; public jets are order <= 2.
using MonoKey = std::uint16_t;

inline constexpr int kMaxJetOrder = 3;

int mono_degree(MonoKey k);
MonoKey mono_unit();
MonoKey mono_var(int axis);              // 0-based axis -> u^(axis+1)
int mono_count(int max_degree);          // number of keys of degree <= max_degree
/// Product key, or -1 when the degree exceeds kMaxJetOrder.
int mono_product(MonoKey a, MonoKey b);
/// d/du_axis: list of (integer factor, key) — at most one term.
std::pair<int, MonoKey> mono_derivative(MonoKey k, int axis);
std::string mono_label(MonoKey k);       // "", "u1", "u1*u3", ...
MonoKey mono_from_label(const std::string& label);

/// Truncated Taylor polynomial at the origin of R^7: coefficients live on the
/// monomial keys above, and every ring operation drops monomials beyond
/// `order`. Zero coefficients are never stored.
class JetScalar {
 public:
  JetScalar() : order_(0) {}
  explicit JetScalar(int order) : order_(order) { check_order(order); }
  static JetScalar constant(int order, const Scalar& c);

  int order() const { return order_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<MonoKey, Scalar>& terms() const { return terms_; }

  /// Value at the origin (zero of the same mode as other coefficients when
  /// the constant term is absent but others exist; exact zero for empty jets).
  Scalar value() const;

  void set(MonoKey k, const Scalar& c);
  Scalar coefficient(MonoKey k) const;

  JetScalar truncated(int order) const;
  JetScalar derivative(int axis) const;  // order drops by one

  JetScalar operator-() const;
  JetScalar& operator+=(const JetScalar& o);
  JetScalar& operator-=(const JetScalar& o);
  JetScalar& operator*=(const JetScalar& o) { return *this = *this * o; }
  JetScalar& operator*=(long k);
  JetScalar& operator/=(long k);
  friend JetScalar operator+(JetScalar a, const JetScalar& b) { return a += b; }
  friend JetScalar operator-(JetScalar a, const JetScalar& b) { return a -= b; }
  friend JetScalar operator*(const JetScalar& a, const JetScalar& b);
  friend JetScalar operator*(JetScalar a, long k) { return a *= k; }
  friend JetScalar operator*(long k, JetScalar a) { return a *= k; }
  friend JetScalar operator/(JetScalar a, long k) { return a /= k; }
  friend JetScalar operator/(JetScalar a, const JetScalar& b) { return a *= b.inverse(); }

  bool operator==(const JetScalar& o) const {
    return order_ == o.order_ && terms_ == o.terms_;
  }

  /// Requires an invertible (nonzero) constant term.
  JetScalar inverse() const;

  /// Newton lift of the constant-term root through the nilpotent part. In
  /// exact mode the constant term must be a perfect nth power.
  JetScalar nth_root(unsigned n) const;

  /// Evaluate at a point (7 Scalars), summing monomials.
  Scalar eval(const std::array<Scalar, 7>& u) const;

 private:
  static void check_order(int order);
  void add_term(MonoKey k, const Scalar& c);

  int order_;
  std::map<MonoKey, Scalar> terms_;
};

JetScalar zero_like(const JetScalar& x);
JetScalar one_like(const JetScalar& x);
JetScalar fraction_like(const JetScalar& x, long num, long den);
Scalar value_part(const JetScalar& x);

}  // namespace g2eds
