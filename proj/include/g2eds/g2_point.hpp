#pragma once

#include <array>
#include <memory>
#include <optional>
#include <vector>

#include "g2eds/alt_form.hpp"
#include "g2eds/errors.hpp"

namespace g2eds {

enum class Definiteness { positive, negative, none };

/// LDL^T sign test on a symmetric Scalar matrix. Exact mode is tolerance-free;
/// float mode treats a pivot below rel_tol times the largest entry as zero.
Definiteness classify_definiteness(std::array<Scalar, 49> m, double rel_tol = 1e-20);

namespace detail {
/// Dense Gauss over the Scalar field (both modes are fields). Returns the
/// solution of A x = b when the system is consistent.
std::optional<std::vector<Scalar>> scalar_linsolve(std::vector<std::vector<Scalar>> A,
                                                   std::vector<Scalar> b,
                                                   double rel_tol = 1e-20);
}  // namespace detail

/// B_ij e^{1..7} = (e_i ⌟ s) ∧ (e_j ⌟ s) ∧ s, the bilinear form whose
/// definiteness characterises definite 3-forms. Cubic in s.
template <typename R>
std::array<R, 49> bilinear_form(const AltFormT<R>& s);

/// A pointwise G2-structure: a definite 3-form with its induced metric,
/// orientation, and cached Hodge-star tables.
///
/// Everything is driven by the single ninth root rho = (36 det B)^(1/9):
///   g = B / rho,   vol = (rho/6) e^{1..7}.
/// rho carries the sign of det B, so g is positive definite and the
/// orientation is the induced one for either sign of the definite B. At the
/// standard form (and its rational pullbacks) rho is rational and the whole
/// structure stays exact.
template <typename R>
class G2PointT {
 public:
  static G2PointT from_three_form(const AltFormT<R>& s, double rel_tol = 1e-20);

  const AltFormT<R>& three_form() const { return s_; }
  const std::array<R, 49>& bilinear() const { return B_; }
  const std::array<R, 49>& metric() const { return g_; }
  const std::array<R, 49>& metric_inverse() const { return ginv_; }
  const R& root() const { return rho_; }
  const R& vol_coefficient() const { return volcoef_; }
  Definiteness definiteness() const { return def_; }

  AltFormT<R> volume_form() const {
    AltFormT<R> v(kDim);
    v.set(kFullMask, volcoef_);
    return v;
  }

  /// Star of a basis element: table entry. Tables are built lazily per degree.
  const std::vector<R>& star_table(int degree) const;

  AltFormT<R> star(const AltFormT<R>& a) const;

  /// <a,b> with a∧∗b = <a,b> vol.
  R inner(const AltFormT<R>& a, const AltFormT<R>& b) const;

  VectorT<R> basis_vector(int axis) const;
  R ring_zero() const { return zero_like(proto_); }
  R ring_one() const { return proto_; }

 private:
  AltFormT<R> s_{3};
  std::array<R, 49> B_, g_, ginv_;
  R rho_, volcoef_, proto_;  // proto_ = one in the scalar mode of s
  Definiteness def_ = Definiteness::none;
  std::shared_ptr<MinorTable<R>> ginv_minors_;
  mutable std::array<std::optional<std::vector<R>>, 8> star_;

  G2PointT(R proto) : rho_(proto), volcoef_(proto), proto_(proto) {}
};

using G2Point = G2PointT<Scalar>;
using G2PointDual = G2PointT<DualScalar>;
using G2PointJet = G2PointT<JetScalar>;

/// Type split of a 2-form: b = b7 + b14, the eigensplit of T(b) = ∗(b∧s)
/// with eigenvalues 2 and -1.
template <typename R>
struct TwoFormSplit {
  AltFormT<R> b7{2}, b14{2};
};

template <typename R>
TwoFormSplit<R> decompose2(const G2PointT<R>& p, const AltFormT<R>& b) {
  AltFormT<R> t = p.star(wedge(b, p.three_form()));
  TwoFormSplit<R> r;
  r.b7 = (t + b) / 3;
  r.b14 = b - r.b7;
  return r;
}

struct ThreeFormSplit {
  AltForm c1{3}, c7{3}, c27{3};
};

/// Orthogonal split of a 3-form into span(s), { ∗(α∧s) }, and the complement.
ThreeFormSplit decompose3(const G2Point& p, const AltForm& c);

/// The unique X with contract(X, s) = -b7. Errors if b7 has a 14-component.
Vector7 vector_from_beta7(const G2Point& p, const AltForm& b7, double rel_tol = 1e-20);

/// Coefficient of s ∧ ∗s against e^{1..7}; equals 7 rho/6 (signed with the
/// induced orientation).
template <typename R>
R volume_density(const G2PointT<R>& p) {
  return wedge(p.three_form(), p.star(p.three_form())).coefficient(kFullMask);
}

/// g(X,·) as a 1-form.
template <typename R>
AltFormT<R> flat(const G2PointT<R>& p, const VectorT<R>& x) {
  AltFormT<R> r(1);
  for (int i = 0; i < kDim; ++i) {
    R acc = p.ring_zero();
    for (int j = 0; j < kDim; ++j) acc += p.metric()[i * 7 + j] * x[j];
    r.add(static_cast<Mask>(1 << i), acc);
  }
  return r;
}

template <typename R>
VectorT<R> sharp(const G2PointT<R>& p, const AltFormT<R>& a) {
  VectorT<R> x{{p.ring_zero(), p.ring_zero(), p.ring_zero(), p.ring_zero(),
                p.ring_zero(), p.ring_zero(), p.ring_zero()}};
  for (int i = 0; i < kDim; ++i) {
    R acc = p.ring_zero();
    for (int j = 0; j < kDim; ++j)
      acc += p.metric_inverse()[i * 7 + j] * a.coefficient(static_cast<Mask>(1 << j));
    x[i] = acc;
  }
  return x;
}

// ---- implementation ----

template <typename R>
std::array<R, 49> bilinear_form(const AltFormT<R>& s) {
  if (s.degree() != 3) throw std::invalid_argument("bilinear_form: need a 3-form");
  if (s.is_zero()) throw std::invalid_argument("bilinear_form: zero form has no mode");
  R zero = zero_like(s.terms().begin()->second);
  R one = one_like(s.terms().begin()->second);
  std::array<R, 49> B{};
  B.fill(zero);
  std::array<AltFormT<R>, 7> hooks;
  for (int i = 0; i < kDim; ++i) {
    VectorT<R> ei{{zero, zero, zero, zero, zero, zero, zero}};
    ei[i] = one;
    hooks[i] = contract(ei, s);
  }
  for (int i = 0; i < kDim; ++i)
    for (int j = i; j < kDim; ++j) {
      AltFormT<R> w = wedge(hooks[i], wedge(hooks[j], s));
      R c = w.is_zero() ? zero : w.coefficient(kFullMask);
      B[i * 7 + j] = c;
      B[j * 7 + i] = c;
    }
  return B;
}

template <typename R>
G2PointT<R> G2PointT<R>::from_three_form(const AltFormT<R>& s, double rel_tol) {
  if (s.degree() != 3 || s.is_zero())
    throw NonDefiniteForm("G2Point: zero or wrong-degree 3-form");
  R one = one_like(s.terms().begin()->second);
  G2PointT p(one);
  p.s_ = s;
  p.B_ = bilinear_form(s);

  std::array<Scalar, 49> bval{};
  for (int i = 0; i < 49; ++i) bval[i] = value_part(p.B_[i]);
  p.def_ = classify_definiteness(bval, rel_tol);
  if (p.def_ == Definiteness::none)
    throw NonDefiniteForm("G2Point: 3-form is not definite");

  MinorTable<R> bmin(p.B_);
  R detB = bmin.minor(kFullMask, kFullMask);
  p.rho_ = (detB * 36).nth_root(9);  // odd root keeps the sign of det B
  R irho = p.rho_.inverse();
  for (int i = 0; i < 49; ++i) p.g_[i] = p.B_[i] * irho;

  // inverse metric through the adjugate (ring-safe: only one division)
  MinorTable<R> gmin(p.g_);
  R detg = gmin.minor(kFullMask, kFullMask);
  R idetg = detg.inverse();
  for (int i = 0; i < kDim; ++i)
    for (int j = 0; j < kDim; ++j) {
      Mask rows = kFullMask & static_cast<Mask>(~(1 << j));
      Mask cols = kFullMask & static_cast<Mask>(~(1 << i));
      R cof = gmin.minor(rows, cols) * idetg;
      if ((i + j) % 2 == 1) cof = -cof;
      p.ginv_[i * 7 + j] = cof;
    }
  p.volcoef_ = p.rho_ / 6;
  p.ginv_minors_ = std::make_shared<MinorTable<R>>(p.ginv_);
  return p;
}

template <typename R>
VectorT<R> G2PointT<R>::basis_vector(int axis) const {
  VectorT<R> v{{ring_zero(), ring_zero(), ring_zero(), ring_zero(), ring_zero(),
                ring_zero(), ring_zero()}};
  v[axis] = proto_;
  return v;
}

template <typename R>
const std::vector<R>& G2PointT<R>::star_table(int degree) const {
  if (degree < 0 || degree > kDim) throw std::out_of_range("star_table: degree");
  if (star_[degree]) return *star_[degree];
  const auto& in_masks = masks_of_degree(degree);
  const int n = static_cast<int>(in_masks.size());
  std::vector<R> table(static_cast<std::size_t>(n) * n, ring_zero());
  // ∗e^I = volcoef sum_J sign(J,J^c) det(ginv[J,I]) e^{J^c}
  for (int in = 0; in < n; ++in) {
    Mask I = in_masks[in];
    for (int jx = 0; jx < n; ++jx) {
      Mask J = in_masks[jx];
      Mask out = kFullMask & static_cast<Mask>(~J);
      R entry = (degree == 0) ? volcoef_
                              : volcoef_ * ginv_minors_->minor(J, I);
      if (wedge_sign(J, out) < 0) entry = -entry;
      table[static_cast<std::size_t>(mask_index(out)) * n + in] = entry;
    }
  }
  star_[degree] = std::move(table);
  return *star_[degree];
}

template <typename R>
AltFormT<R> G2PointT<R>::star(const AltFormT<R>& a) const {
  const int p = a.degree();
  const auto& table = star_table(p);
  const auto& out_masks = masks_of_degree(kDim - p);
  const int n = static_cast<int>(out_masks.size());
  AltFormT<R> r(kDim - p);
  for (int out = 0; out < n; ++out) {
    R acc = ring_zero();
    for (const auto& [I, c] : a.terms())
      acc += table[static_cast<std::size_t>(out) * n + mask_index(I)] * c;
    r.add(out_masks[out], acc);
  }
  return r;
}

template <typename R>
R G2PointT<R>::inner(const AltFormT<R>& a, const AltFormT<R>& b) const {
  AltFormT<R> w = wedge(a, star(b));
  if (w.is_zero()) return ring_zero();
  return w.coefficient(kFullMask) * volcoef_.inverse();
}

}  // namespace g2eds
