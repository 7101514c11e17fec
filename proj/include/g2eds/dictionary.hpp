#pragma once

#include <functional>
#include <vector>

#include "g2eds/g2_point.hpp"
#include "g2eds/jet_form.hpp"

namespace g2eds {

/// A point of the total space: a definite 3-form (with its G2 data) and a
/// 2-form at the same base point.
struct FiberPoint {
  G2Point base;
  AltForm b{2};
};

// ---- torsion 2-form ----

/// tau = -∗(d(∗σσ)) at the origin of a closed, definite sigma-jet. For closed
/// sigma the defining relations d(∗σσ) = τ∧σ = -∗τ hold and tau is type 14.
AltForm tau_from_jet(const JetForm& sigma_jet);

/// The same tau as a jet of one order lower (used by the Laplacian identity).
JetForm tau_jet(const JetForm& sigma_jet);

struct TauDiagnostics {
  AltForm tau{2};
  AltForm residual_wedge{5};  // d(∗σσ) - τ∧σ at the origin
  AltForm residual_star{5};   // d(∗σσ) + ∗τ at the origin
};
TauDiagnostics tau_diagnostics(const JetForm& sigma_jet);

// ---- first-order soliton system ----

struct SolitonResiduals {
  AltForm r3{3};  // dβ - λσ
  AltForm r4{4};  // dσ
  AltForm r5{5};  // d(∗σσ) + (2/3)∗σβ - (1/3)β∧σ
  AltForm r6{6};  // d(∗σβ)
  bool all_zero() const {
    return r3.is_zero() && r4.is_zero() && r5.is_zero() && r6.is_zero();
  }
};

/// The four left-hand sides at the origin; all vanish iff the jet solves the
/// soliton system to first order there.
SolitonResiduals soliton_residuals(const JetForm& sigma_jet, const JetForm& beta_jet,
                                   const Scalar& lambda);

/// Δσσ - dτ at the origin for a closed order-2 jet, with the Hodge Laplacian
/// dδ + δd assembled from jet star tables.
AltForm laplacian_identity_residual(const JetForm& sigma_jet);

// ---- gradient obstruction ----

struct GradientObstruction {
  Vector7 x;                    // soliton vector field, β₇ = -X⌟σ
  AltForm tau{2};               // β₁₄
  AltForm one_form{1};          // X⌟τ
  AltForm xflat_six_form{6};    // X♭∧τ∧σ
  AltForm z_six_form{6};        // (∗s(b∧∗ss))∧b∧s
  bool proportionality_ok = false;  // z_six_form == -3 · xflat_six_form
};

GradientObstruction gradient_obstruction(const FiberPoint& fp);

// ---- forward-mode fiber derivatives ----

using DualForms = std::vector<AltFormT<DualScalar>>;
using DualFormMap = std::function<DualForms(const DualForms&)>;

/// d/dt at t=0 of F(base + t*direction) by dual-number evaluation. Exact
/// whenever the ninth roots at `base` are rational.
std::vector<AltForm> fiber_derivative(const DualFormMap& f, const std::vector<AltForm>& base,
                                      const std::vector<AltForm>& direction);

// The pointwise map family the star/metric derivative work draws from.
template <typename R>
AltFormT<R> star_sigma_sigma(const AltFormT<R>& s) {
  auto p = G2PointT<R>::from_three_form(s);
  return p.star(s);
}

template <typename R>
AltFormT<R> star_sigma_form(const AltFormT<R>& s, const AltFormT<R>& a) {
  auto p = G2PointT<R>::from_three_form(s);
  return p.star(a);
}

/// z(s,b) = ∗s(b ∧ ∗s s), the 1-form dual (up to the factor -3) of the
/// soliton vector field.
template <typename R>
AltFormT<R> z_one_form(const AltFormT<R>& s, const AltFormT<R>& b) {
  auto p = G2PointT<R>::from_three_form(s);
  return p.star(wedge(b, p.star(s)));
}

}  // namespace g2eds
