#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "g2eds/dual.hpp"
#include "g2eds/jet_scalar.hpp"
#include "g2eds/minors.hpp"
#include "g2eds/multi_index.hpp"
#include "g2eds/scalar.hpp"

namespace g2eds {

template <typename R>
struct VectorT {
  std::array<R, 7> c;
  const R& operator[](int i) const { return c[i]; }
  R& operator[](int i) { return c[i]; }
};

using Vector7 = VectorT<Scalar>;

/// Sparse alternating p-form on R^7 with coefficients in a commutative ring R
/// (exact/float Scalar, dual numbers, or truncated jets). Zero coefficients
/// are never stored, so == is coefficientwise equality of canonical forms.
template <typename R>
class AltFormT {
 public:
  explicit AltFormT(int degree = 0) : degree_(degree) {
    if (degree < 0 || degree > kDim) throw std::invalid_argument("AltForm: degree");
  }

  int degree() const { return degree_; }
  const std::map<Mask, R>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void set(Mask m, const R& coeff) {
    if (mask_degree(m) != degree_) throw std::invalid_argument("AltForm::set: index degree");
    if (coeff.is_zero())
      terms_.erase(m);
    else
      terms_[m] = coeff;
  }

  void add(Mask m, const R& coeff) {
    if (mask_degree(m) != degree_) throw std::invalid_argument("AltForm::add: index degree");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!coeff.is_zero()) terms_.emplace(m, coeff);
      return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }

  /// Coefficient at m; zero coefficients come back in the mode of some stored
  /// coefficient when one exists.
  R coefficient(Mask m) const {
    auto it = terms_.find(m);
    if (it != terms_.end()) return it->second;
    if (!terms_.empty()) return zero_like(terms_.begin()->second);
    return R_zero();
  }

  AltFormT operator-() const {
    AltFormT r(degree_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }
  AltFormT& operator+=(const AltFormT& o) {
    check_degree(o);
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
  }
  AltFormT& operator-=(const AltFormT& o) {
    check_degree(o);
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
  }
  friend AltFormT operator+(AltFormT a, const AltFormT& b) { return a += b; }
  friend AltFormT operator-(AltFormT a, const AltFormT& b) { return a -= b; }

  AltFormT& operator*=(const R& k) {
    if (k.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= k;
    prune();
    return *this;
  }
  AltFormT& operator*=(long k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= k;
    return *this;
  }
  AltFormT& operator/=(long k) {
    for (auto& [m, c] : terms_) c /= k;
    return *this;
  }
  friend AltFormT operator*(AltFormT a, const R& k) { return a *= k; }
  friend AltFormT operator*(const R& k, AltFormT a) { return a *= k; }
  friend AltFormT operator*(AltFormT a, long k) { return a *= k; }
  friend AltFormT operator*(long k, AltFormT a) { return a *= k; }
  friend AltFormT operator/(AltFormT a, long k) { return a /= k; }

  bool operator==(const AltFormT& o) const {
    return degree_ == o.degree_ && terms_ == o.terms_;
  }

 private:
  static R R_zero() {
    if constexpr (std::is_same_v<R, Scalar>)
      return Scalar();
    else
      throw std::logic_error("AltForm: coefficient of an empty non-Scalar form");
  }
  void check_degree(const AltFormT& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("AltForm: mixed degrees");
  }
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }

  int degree_;
  std::map<Mask, R> terms_;
};

using AltForm = AltFormT<Scalar>;

/// Exterior product. Degrees summing past 7 give the zero form of degree
/// min(7, sum) by convention stated in the contract.
template <typename R>
AltFormT<R> wedge(const AltFormT<R>& a, const AltFormT<R>& b) {
  int d = a.degree() + b.degree();
  if (d > kDim) return AltFormT<R>(kDim);
  AltFormT<R> r(d);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      R prod = ca * cb;
      if (s < 0) prod = -prod;
      r.add(static_cast<Mask>(ma | mb), prod);
    }
  return r;
}

/// Interior product v ⌟ a. Degree drops by one; degree-0 input is an error.
template <typename R>
AltFormT<R> contract(const VectorT<R>& v, const AltFormT<R>& a) {
  if (a.degree() == 0) throw std::domain_error("contract: degree-0 form");
  AltFormT<R> r(a.degree() - 1);
  for (const auto& [m, c] : a.terms())
    for (int axis = 0; axis < kDim; ++axis) {
      if (!(m & (1 << axis))) continue;
      R term = v[axis] * c;
      if (contraction_sign(axis, m) < 0) term = -term;
      r.add(static_cast<Mask>(m & ~(1 << axis)), term);
    }
  return r;
}

template <typename R>
R small_det(std::span<const VectorT<R>> vectors, const std::vector<int>& axes,
            std::size_t col, unsigned rows_left) {
  int r0 = std::countr_zero(rows_left);
  if (col + 1 == axes.size()) return vectors[r0][axes[col]];
  std::optional<R> acc;
  int pos = 0;
  unsigned rl = rows_left;
  while (rl) {
    int r = std::countr_zero(rl);
    rl &= rl - 1;
    R term = vectors[r][axes[col]] * small_det<R>(vectors, axes, col + 1,
                                                  rows_left & ~(1u << r));
    if (pos % 2 == 1) term = -term;
    if (acc)
      *acc += term;
    else
      acc = term;
    ++pos;
  }
  return *acc;
}

/// Evaluate a p-form on p vectors: sum over terms of coefficient times the
/// determinant of the selected components.
template <typename R>
R eval_on(const AltFormT<R>& a, std::span<const VectorT<R>> vectors) {
  if (static_cast<int>(vectors.size()) != a.degree())
    throw std::invalid_argument("eval_on: wrong number of vectors");
  std::optional<R> acc;
  for (const auto& [m, c] : a.terms()) {
    auto axes = mask_axes(m);
    R det = small_det<R>(vectors, axes, 0, (1u << vectors.size()) - 1);
    R term = c * det;
    if (acc)
      *acc += term;
    else
      acc = term;
  }
  if (acc) return *acc;
  if (!vectors.empty()) return zero_like(vectors[0][0]);
  throw std::logic_error("eval_on: empty 0-form");
}

/// Pullback under a linear map A (7x7, row-major): (A^*a)_J = sum_I a_I det A[I,J].
template <typename R>
AltFormT<R> pullback(const AltFormT<R>& a, const std::array<R, 49>& A) {
  if (a.degree() == 0) return a;
  MinorTable<R> minors(A);
  AltFormT<R> r(a.degree());
  for (Mask J : masks_of_degree(a.degree()))
    for (const auto& [I, c] : a.terms()) r.add(J, c * minors.minor(I, J));
  return r;
}

/// The reference definite 3-form. Its bilinear form is 6·I and its metric is
/// the identity, which pins every downstream convention.
inline AltForm standard_three_form() {
  AltForm f(3);
  auto term = [&](const char* label, long v) {
    f.set(mask_from_label(label), Scalar::integer(v));
  };
  term("123", 1);
  term("145", 1);
  term("167", 1);
  term("246", 1);
  term("257", -1);
  term("347", -1);
  term("356", -1);
  return f;
}

template <typename R>
R scalar_into(const Scalar& s, const R& like);

template <>
inline Scalar scalar_into<Scalar>(const Scalar& s, const Scalar& like) {
  if (like.is_exact() != s.is_exact())
    return s.is_exact() ? s.to_floating(like.precision_bits()) : s;
  return s;
}
template <>
inline DualScalar scalar_into<DualScalar>(const Scalar& s, const DualScalar& like) {
  return DualScalar::constant(scalar_into<Scalar>(s, like.val));
}
template <>
inline JetScalar scalar_into<JetScalar>(const Scalar& s, const JetScalar& like) {
  return JetScalar::constant(like.order(), scalar_into<Scalar>(s, value_part(like)));
}

/// Re-coefficient an exact form into another ring (constants in that ring).
template <typename R>
AltFormT<R> lift_form(const AltForm& a, const R& like) {
  AltFormT<R> r(a.degree());
  for (const auto& [m, c] : a.terms()) r.set(m, scalar_into<R>(c, like));
  return r;
}

}  // namespace g2eds
