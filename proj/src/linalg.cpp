#include "g2eds/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace g2eds {

namespace {

// Pivot preference for exact elimination: smallest numerator+denominator bit
// size. Keeping pivots simple curbs coefficient growth without changing the
// exact result.
std::size_t rational_size(const mpq_class& x) {
  return mpz_sizeinbase(x.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(x.get_den().get_mpz_t(), 2);
}

// One elimination pass shared by echelon and rref.
template <bool kReduced>
Echelon<mpq_class> eliminate_q(MatQ m, Exec exec) {
  Echelon<mpq_class> e;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    std::size_t best_size = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      std::size_t s = rational_size(m(i, c));
      if (best == rows || s < best_size) {
        best = i;
        best_size = s;
      }
    }
    if (best == rows) continue;
    if (best != r)
      for (std::size_t j = c; j < cols; ++j) swap(m(r, j), m(best, j));

    if constexpr (kReduced) {
      mpq_class inv = 1 / m(r, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(r, j)) != 0) m(r, j) *= inv;
    }

    const std::size_t lo = kReduced ? 0 : r + 1;
    const bool parallel = exec == Exec::parallel && (rows - lo) * (cols - c) > 2048;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
    for (std::size_t i = lo; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      mpq_class f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(m(r, j)) == 0) continue;
        m(i, j) -= f * m(r, j);
      }
    }
    (void)parallel;
    e.pivot_cols.push_back(static_cast<int>(c));
    ++r;
  }
  e.rank = static_cast<int>(r);
  e.m = std::move(m);
  return e;
}

}  // namespace

Echelon<mpq_class> echelonize(MatQ m, Exec exec) { return eliminate_q<false>(std::move(m), exec); }

Echelon<mpq_class> rref(MatQ m, Exec exec) { return eliminate_q<true>(std::move(m), exec); }

Echelon<mpf_class> echelonize(MatF m, Exec exec, double rel_tol) {
  Echelon<mpf_class> e;
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return e;
  mpf_class scale = abs(m(0, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (scale < abs(m(i, j))) scale = abs(m(i, j));
  mpf_class tol = scale * rel_tol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (abs(m(i, c)) <= tol) continue;
      if (best == rows || abs(m(best, c)) < abs(m(i, c))) best = i;
    }
    if (best == rows) continue;
    if (best != r)
      for (std::size_t j = c; j < cols; ++j) swap(m(r, j), m(best, j));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
#endif
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      mpf_class f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    e.pivot_cols.push_back(static_cast<int>(c));
    ++r;
  }
  e.rank = static_cast<int>(r);
  e.m = std::move(m);
  return e;
}

int rank(const MatQ& m, Exec exec) { return echelonize(m, exec).rank; }

int rank(const MatF& m, double rel_tol, Exec exec) {
  return echelonize(m, exec, rel_tol).rank;
}

std::pair<int, int> rank_with_augmented(const MatQ& a, const std::vector<mpq_class>& b,
                                        Exec exec) {
  MatQ aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto e = echelonize(std::move(aug), exec);
  int rank_a = 0;
  for (int c : e.pivot_cols)
    if (c < static_cast<int>(a.cols())) ++rank_a;
  return {rank_a, e.rank};
}

std::vector<std::vector<mpq_class>> nullspace(const MatQ& a, Exec exec) {
  auto e = rref(a, exec);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(cols, mpq_class(0));
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
      v[e.pivot_cols[i]] = -e.m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<mpq_class>> solve(const MatQ& a, const std::vector<mpq_class>& b,
                                            Exec exec) {
  MatQ aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto e = rref(std::move(aug), exec);
  for (int c : e.pivot_cols)
    if (c == static_cast<int>(a.cols())) return std::nullopt;
  std::vector<mpq_class> x(a.cols(), mpq_class(0));
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
    x[e.pivot_cols[i]] = e.m(i, a.cols());
  return x;
}

std::vector<std::vector<mpq_class>> left_nullspace(const MatQ& a, Exec exec) {
  return nullspace(a.transpose(), exec);
}

int rank_bareiss(const MatQ& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class scaled = a(i, j) * l;
      m[i][j] = scaled.get_num();
    }
  }
  mpz_class prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (sgn(m[i][c]) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace g2eds
