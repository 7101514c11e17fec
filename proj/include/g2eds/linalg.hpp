#pragma once

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

namespace g2eds {

/// Dense row-major matrix over an exact or big-float field.
template <typename T>
class Matrix {
 public:
  Matrix() : r_(0), c_(0) {}
  Matrix(std::size_t r, std::size_t c, const T& init = T())
      : r_(r), c_(c), a_(r * c, init) {}

  static Matrix identity(std::size_t n, const T& one = T(1), const T& zero = T()) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  Matrix transpose() const {
    Matrix t(c_, r_, a_.empty() ? T() : a_[0]);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix select_columns(const std::vector<int>& cols) const {
    Matrix s(r_, cols.size(), a_.empty() ? T() : a_[0]);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(i, cols[j]);
    return s;
  }

  std::vector<T> multiply(const std::vector<T>& x) const {
    std::vector<T> y(r_, a_.empty() ? T() : T(a_[0] * 0));
    for (std::size_t i = 0; i < r_; ++i) {
      T acc = a_[0] * 0;
      for (std::size_t j = 0; j < c_; ++j) acc += (*this)(i, j) * x[j];
      y[i] = acc;
    }
    return y;
  }

  Matrix multiply(const Matrix& b) const {
    Matrix y(r_, b.cols(), a_.empty() ? T() : T(a_[0] * 0));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        if (sgn((*this)(i, k)) == 0) continue;
        for (std::size_t j = 0; j < b.cols(); ++j)
          y(i, j) += (*this)(i, k) * b(k, j);
      }
    return y;
  }

  void append_row(const std::vector<T>& row) {
    a_.insert(a_.end(), row.begin(), row.end());
    ++r_;
    if (c_ == 0) c_ = row.size();
  }

  bool operator==(const Matrix& o) const {
    return r_ == o.r_ && c_ == o.c_ && a_ == o.a_;
  }

 private:
  std::size_t r_, c_;
  std::vector<T> a_;
};

using MatQ = Matrix<mpq_class>;
using MatF = Matrix<mpf_class>;

/// Elimination kernel selection: the OpenMP row-update kernel is the default;
/// the serial kernel is the reference the tests compare against. Exact
/// arithmetic makes the two bit-identical.
enum class Exec { serial, parallel };

template <typename T>
struct Echelon {
  Matrix<T> m;
  std::vector<int> pivot_cols;
  int rank = 0;
};

/// Row echelon form (not reduced). rel_tol is ignored for mpq; for mpf a
/// pivot candidate below rel_tol times the largest initial entry is zero.
Echelon<mpq_class> echelonize(MatQ m, Exec exec = Exec::parallel);
Echelon<mpf_class> echelonize(MatF m, Exec exec, double rel_tol);

/// Reduced row echelon form (unit pivots, eliminated above and below).
Echelon<mpq_class> rref(MatQ m, Exec exec = Exec::parallel);

int rank(const MatQ& m, Exec exec = Exec::parallel);
int rank(const MatF& m, double rel_tol, Exec exec = Exec::parallel);

/// rank(A) and rank([A|b]) from one elimination with b as the last column.
std::pair<int, int> rank_with_augmented(const MatQ& a, const std::vector<mpq_class>& b,
                                        Exec exec = Exec::parallel);

/// Basis of { x : A x = 0 }, one vector per free column of the RREF.
std::vector<std::vector<mpq_class>> nullspace(const MatQ& a, Exec exec = Exec::parallel);

/// Some solution of A x = b, or nullopt when inconsistent.
std::optional<std::vector<mpq_class>> solve(const MatQ& a, const std::vector<mpq_class>& b,
                                            Exec exec = Exec::parallel);

std::vector<std::vector<mpq_class>> left_nullspace(const MatQ& a, Exec exec = Exec::parallel);

/// Fraction-free (Bareiss) rank over the integers after clearing row
/// denominators. Independent of the mpq elimination path; serial by design —
/// it is the cross-check oracle, not the workhorse.
int rank_bareiss(const MatQ& a);

}  // namespace g2eds
