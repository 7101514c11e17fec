#pragma once

#include <memory>
#include <string>

#include "g2eds/dictionary.hpp"
#include "g2eds/linalg.hpp"

namespace g2eds {

/// One generator of the differential ideal, reduced to its fiberwise symbol
/// at a point (s,b): a d-form of the shape  sum_A nu_A ∧ e^A + torsion  with
/// nu_A a vertical 1-form (a row over the 56 fiber coordinates) and torsion a
/// semibasic d-form. Both the equations on graphs L:W→V and the polar
/// equations of integral flags are assembled from exactly this data.
struct GeneratorSymbol {
  std::string name;
  int degree = 0;
  MatQ nu;          // C(7, degree-1) x 56, rows in canonical (degree-1)-mask order
  AltForm torsion;  // degree-d form over W (exact coefficients)
};

/// Which generators enter the system. The four soliton generators are the
/// exterior derivatives of the tautological b, s, ∗s, ∗b; `harmonic` appends
/// the seven 7-form generators of the harmonic-coordinate extension and
/// `gradient` the 2-form generator imposing closedness of the dual 1-form.
struct SymbolOptions {
  bool closure_of_b = true;   // 3-form block (dβ - λσ)
  bool closure_of_s = true;   // 4-form block (dσ)
  bool costar_s = true;       // 5-form block (d∗σσ + torsion)
  bool costar_b = true;       // 6-form block (d∗σβ)
  bool harmonic = false;      // 7-form block, 7 generators
  bool gradient = false;      // 2-form block (d of the dual 1-form)
  bool include_torsion = true;

  static SymbolOptions sigma_only() {
    SymbolOptions o;
    o.closure_of_b = o.costar_b = false;
    o.include_torsion = false;
    return o;
  }
  static SymbolOptions beta_only() {
    SymbolOptions o;
    o.closure_of_s = o.costar_s = false;
    o.include_torsion = false;
    return o;
  }
};

/// The affine system A·vec(L) + torsion = 0 on L in Hom(W, fiber), with the
/// fiber parametrised by the columns of `fiber_basis` (identity-56 when the
/// full fiber Λ³⊕Λ² is in play). Column layout: base direction major,
/// col = i*m + f.
struct SymbolSystem {
  std::vector<GeneratorSymbol> generators;
  std::vector<MatQ> nu_restricted;  // generator nu times fiber_basis
  MatQ fiber_basis;                 // 56 x m
  MatQ equations;                   // rows x 7m
  std::vector<mpq_class> torsion;
  std::vector<std::pair<std::string, int>> blocks;  // (generator, row count)
  mpq_class lambda;

  int fiber_dim() const { return static_cast<int>(fiber_basis.cols()); }
  int unknowns() const { return 7 * fiber_dim(); }
};

struct IntegralElementSpace {
  std::vector<mpq_class> particular;                  // one solution, length 7m
  std::vector<std::vector<mpq_class>> nullspace_basis;
  int dimension() const { return static_cast<int>(nullspace_basis.size()); }
};

/// A linear map L: W -> fiber as the 7 fiber images of the coordinate axes.
struct HomWV {
  std::array<AltForm, 7> sigma;
  std::array<AltForm, 7> beta;
};

std::vector<mpq_class> dense_form(const AltForm& a);
AltForm form_from_dense(const std::vector<mpq_class>& v, int degree);

/// Assembler for all symbol systems at one fiber point. Requires the exact
/// star path at the base (rational rho), i.e. the standard form, a rational
/// rescale, or a rational pullback of it.
class SolitonEds {
 public:
  SolitonEds(FiberPoint fp, mpq_class lambda);

  const FiberPoint& point() const { return fp_; }
  const mpq_class& lambda() const { return lambda_; }

  SymbolSystem system(const SymbolOptions& opts = {}) const;
  SymbolSystem system_restricted(const SymbolOptions& opts, const MatQ& fiber_basis) const;

  /// Exact star table of degree p at the base point, as a rational matrix.
  const MatQ& star_table(int degree) const;
  /// Derivative of that table in the sigma-direction dir3 (0..34).
  const MatQ& star_table_derivative(int degree, int dir3) const;

  /// The seven left-kernel covectors of the full 98-row system that express
  /// the first-order 6-form identity ( ∗d∗σ )∧∗σ + ( ∗dσ )∧σ = 0: zero on the
  /// 3- and 6-form blocks, (∗e^K)∧s on the 4-form block and (∗e^Q)∧∗s on the
  /// 5-form block, one row per missing axis.
  MatQ fundamental_identity_kernel() const;

  /// Derivative of (s,b) -> coefficients of (∗s(b∧∗ss))∧b∧s, a 7 x 56 matrix.
  MatQ z_locus_jacobian() const;

  HomWV hom_from_vector(const SymbolSystem& sys, const std::vector<mpq_class>& v) const;

 private:
  void build_generator(std::vector<GeneratorSymbol>& out, const SymbolOptions& opts) const;
  const G2PointDual& dual_point(int dir3) const;

  FiberPoint fp_;
  mpq_class lambda_;
  std::vector<mpq_class> s_vec_, b_vec_;
  mutable std::array<std::optional<MatQ>, 8> star_;
  mutable std::array<std::vector<std::optional<MatQ>>, 8> dstar_;
  mutable std::vector<std::optional<G2PointDual>> duals_;
};

/// Solve A·vec(L) + torsion = 0: a particular solution plus the nullspace.
/// Throws InconsistentSystem when the torsion is outside the column space.
IntegralElementSpace integral_elements(const SymbolSystem& sys, Exec exec = Exec::parallel);

/// rank(A) and rank([A | torsion]).
std::pair<int, int> symbol_ranks(const SymbolSystem& sys, Exec exec = Exec::parallel);

}  // namespace g2eds
