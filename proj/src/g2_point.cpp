#include "g2eds/g2_point.hpp"

namespace g2eds {

Definiteness classify_definiteness(std::array<Scalar, 49> m, double rel_tol) {
  // LDL^T pivots: all positive or all negative. Float pivots are compared
  // against rel_tol times the largest input entry.
  bool exact = m[0].is_exact();
  Scalar scale = m[0].abs();
  if (!exact)
    for (int i = 0; i < 49; ++i) {
      Scalar a = m[i].abs();
      if (scale < a) scale = a;
    }
  int want = 0;
  for (int k = 0; k < kDim; ++k) {
    Scalar d = m[k * 7 + k];
    int s = d.sign();
    if (!exact) {
      Scalar tol = scale * Scalar::floating(rel_tol, d.precision_bits());
      if (d.abs() < tol) return Definiteness::none;
    }
    if (s == 0) return Definiteness::none;
    if (want == 0)
      want = s;
    else if (s != want)
      return Definiteness::none;
    for (int i = k + 1; i < kDim; ++i) {
      Scalar f = m[i * 7 + k] / d;
      for (int j = k; j < kDim; ++j) m[i * 7 + j] -= f * m[k * 7 + j];
    }
  }
  return want > 0 ? Definiteness::positive : Definiteness::negative;
}

namespace detail {

std::optional<std::vector<Scalar>> scalar_linsolve(std::vector<std::vector<Scalar>> A,
                                                   std::vector<Scalar> b,
                                                   double rel_tol) {
  const std::size_t rows = A.size();
  if (rows == 0) return std::vector<Scalar>{};
  const std::size_t cols = A[0].size();
  const bool exact = b.empty() ? A[0][0].is_exact() : b[0].is_exact();

  auto negligible = [&](const Scalar& x, const Scalar& scale) {
    if (exact) return x.is_zero();
    Scalar tol = scale * Scalar::floating(rel_tol, x.precision_bits());
    return x.abs() < tol || x.is_zero();
  };
  Scalar scale = A[0][0].abs();
  if (!exact)
    for (const auto& row : A)
      for (const auto& x : row) {
        Scalar a = x.abs();
        if (scale < a) scale = a;
      }

  std::vector<int> pivot_col_of_row;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = r;
    bool found = false;
    for (std::size_t i = r; i < rows; ++i) {
      if (negligible(A[i][c], scale)) continue;
      if (!found || (!exact && A[best][c].abs() < A[i][c].abs())) {
        best = i;
        found = true;
        if (exact) break;
      }
    }
    if (!found) continue;
    std::swap(A[r], A[best]);
    std::swap(b[r], b[best]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c].is_zero()) continue;
      Scalar f = A[i][c] / A[r][c];
      for (std::size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivot_col_of_row.push_back(static_cast<int>(c));
    ++r;
  }
  // consistency: residual rows must have zero rhs
  for (std::size_t i = r; i < rows; ++i)
    if (!negligible(b[i], scale)) return std::nullopt;

  std::vector<Scalar> x(cols, exact ? Scalar() : zero_like(b[0]));
  for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
    x[pivot_col_of_row[i]] = b[i] / A[i][pivot_col_of_row[i]];
  return x;
}

}  // namespace detail

ThreeFormSplit decompose3(const G2Point& p, const AltForm& c) {
  ThreeFormSplit r;
  const AltForm& s = p.three_form();
  Scalar ss = p.inner(s, s);  // 7 at every G2 point, but computed, not assumed
  r.c1 = s * (p.inner(c, s) / ss);

  // basis of the 7-dimensional piece: T_i = ∗(e^i ∧ s)
  std::array<AltForm, 7> basis;
  for (int i = 0; i < kDim; ++i) {
    AltForm ei(1);
    ei.set(static_cast<Mask>(1 << i), p.ring_one());
    basis[i] = p.star(wedge(ei, s));
  }
  std::vector<std::vector<Scalar>> gram(7, std::vector<Scalar>(7, p.ring_zero()));
  std::vector<Scalar> rhs(7, p.ring_zero());
  for (int i = 0; i < kDim; ++i) {
    rhs[i] = p.inner(basis[i], c);
    for (int j = 0; j < kDim; ++j) gram[i][j] = p.inner(basis[i], basis[j]);
  }
  auto x = detail::scalar_linsolve(gram, rhs);
  if (!x) throw std::logic_error("decompose3: singular Gram matrix");
  r.c7 = AltForm(3);
  for (int i = 0; i < kDim; ++i) r.c7 += basis[i] * (*x)[i];
  r.c27 = c - r.c1 - r.c7;
  return r;
}

Vector7 vector_from_beta7(const G2Point& p, const AltForm& b7, double rel_tol) {
  auto split = decompose2(p, b7);
  bool pure;
  if (p.ring_one().is_exact()) {
    pure = split.b14.is_zero();
  } else {
    Scalar n14 = p.inner(split.b14, split.b14);
    Scalar n = p.inner(b7, b7);
    Scalar tol = n * Scalar::floating(rel_tol, p.ring_one().precision_bits());
    pure = b7.is_zero() || n14 < tol;
  }
  if (!pure)
    throw std::domain_error("vector_from_beta7: input has a type-14 component");

  // contract(X, s) = -b7: 21 equations in 7 unknowns, consistent by purity
  const auto& rows = masks_of_degree(2);
  std::vector<std::vector<Scalar>> A(rows.size(), std::vector<Scalar>(7, p.ring_zero()));
  std::vector<Scalar> rhs(rows.size(), p.ring_zero());
  for (int j = 0; j < kDim; ++j) {
    AltForm col = contract(p.basis_vector(j), p.three_form());
    for (std::size_t r = 0; r < rows.size(); ++r) A[r][j] = col.coefficient(rows[r]);
  }
  for (std::size_t r = 0; r < rows.size(); ++r)
    rhs[r] = -scalar_into<Scalar>(b7.coefficient(rows[r]), p.ring_one());
  auto x = detail::scalar_linsolve(A, rhs, rel_tol);
  if (!x) throw std::logic_error("vector_from_beta7: inconsistent system");
  Vector7 v{{p.ring_zero(), p.ring_zero(), p.ring_zero(), p.ring_zero(), p.ring_zero(),
             p.ring_zero(), p.ring_zero()}};
  for (int j = 0; j < kDim; ++j) v[j] = (*x)[j];
  return v;
}

}  // namespace g2eds
