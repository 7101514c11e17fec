#pragma once

#include "g2eds/scalar.hpp"

namespace g2eds {

/// First-order jet in one parameter: val + der·ε with ε² = 0. This is the
/// forward-mode carrier for all fiberwise directional derivatives.
struct DualScalar {
  Scalar val;
  Scalar der;

  static DualScalar constant(const Scalar& c) { return {c, zero_like(c)}; }
  static DualScalar seed(const Scalar& c, const Scalar& d) { return {c, d}; }

  bool is_zero() const { return val.is_zero() && der.is_zero(); }

  DualScalar operator-() const { return {-val, -der}; }

  DualScalar& operator+=(const DualScalar& o) {
    val += o.val;
    der += o.der;
    return *this;
  }
  DualScalar& operator-=(const DualScalar& o) {
    val -= o.val;
    der -= o.der;
    return *this;
  }
  DualScalar& operator*=(const DualScalar& o) {
    der = val * o.der + der * o.val;
    val *= o.val;
    return *this;
  }
  DualScalar& operator*=(long k) {
    val *= k;
    der *= k;
    return *this;
  }
  DualScalar& operator/=(long k) {
    val /= k;
    der /= k;
    return *this;
  }
  DualScalar& operator/=(const DualScalar& o) { return *this *= o.inverse(); }

  friend DualScalar operator+(DualScalar a, const DualScalar& b) { return a += b; }
  friend DualScalar operator-(DualScalar a, const DualScalar& b) { return a -= b; }
  friend DualScalar operator*(DualScalar a, const DualScalar& b) { return a *= b; }
  friend DualScalar operator/(DualScalar a, const DualScalar& b) { return a /= b; }
  friend DualScalar operator*(DualScalar a, long k) { return a *= k; }
  friend DualScalar operator*(long k, DualScalar a) { return a *= k; }
  friend DualScalar operator/(DualScalar a, long k) { return a /= k; }

  bool operator==(const DualScalar& o) const { return val == o.val && der == o.der; }

  DualScalar inverse() const {
    Scalar iv = val.inverse();
    return {iv, -(der * iv * iv)};
  }

  // (val + der ε)^(1/n) = r + (der/(n val)) r ε with r = val^(1/n)
  DualScalar nth_root(unsigned n) const {
    Scalar r = val.nth_root(n);
    return {r, der * r / (val * static_cast<long>(n))};
  }
};

inline DualScalar zero_like(const DualScalar& x) {
  return DualScalar::constant(zero_like(x.val));
}
inline DualScalar one_like(const DualScalar& x) {
  return DualScalar::constant(one_like(x.val));
}
inline DualScalar fraction_like(const DualScalar& x, long num, long den) {
  return DualScalar::constant(fraction_like(x.val, num, den));
}
inline const Scalar& value_part(const DualScalar& x) { return x.val; }

}  // namespace g2eds
