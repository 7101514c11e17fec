#include "g2eds/dictionary.hpp"

namespace g2eds {

namespace {

int jet_order_of(const JetForm& a) {
  for (const auto& [m, c] : a.terms()) return c.order();
  throw std::domain_error("jet: empty form has no order");
}

void require_closed(const JetForm& sigma_jet) {
  if (!jet_d(sigma_jet).is_zero())
    throw std::domain_error("sigma-jet is not closed");
}

}  // namespace

JetForm tau_jet(const JetForm& sigma_jet) {
  require_closed(sigma_jet);
  const int order = jet_order_of(sigma_jet);
  if (order < 1) throw std::domain_error("tau_jet: order must be >= 1");
  auto p_full = G2PointJet::from_three_form(sigma_jet);
  JetForm dt = jet_d(p_full.star(sigma_jet));  // order-1 5-form
  auto p_low = G2PointJet::from_three_form(truncate_order(sigma_jet, order - 1));
  return -p_low.star(dt);
}

AltForm tau_from_jet(const JetForm& sigma_jet) {
  return value_at_origin(tau_jet(sigma_jet));
}

TauDiagnostics tau_diagnostics(const JetForm& sigma_jet) {
  TauDiagnostics d;
  const int order = jet_order_of(sigma_jet);
  auto p_full = G2PointJet::from_three_form(sigma_jet);
  require_closed(sigma_jet);
  JetForm dt = jet_d(p_full.star(sigma_jet));
  auto p_low = G2PointJet::from_three_form(truncate_order(sigma_jet, order - 1));
  d.tau = value_at_origin(-p_low.star(dt));

  AltForm s0 = value_at_origin(sigma_jet);
  AltForm dt0 = value_at_origin(dt);
  auto p0 = G2Point::from_three_form(s0);
  d.residual_wedge = dt0 - wedge(d.tau, s0);
  d.residual_star = dt0 + p0.star(d.tau);
  return d;
}

SolitonResiduals soliton_residuals(const JetForm& sigma_jet, const JetForm& beta_jet,
                                   const Scalar& lambda) {
  SolitonResiduals r;
  AltForm s0 = value_at_origin(sigma_jet);
  AltForm b0 = value_at_origin(beta_jet);
  auto p0 = G2Point::from_three_form(s0);
  auto p_full = G2PointJet::from_three_form(sigma_jet);

  r.r3 = value_at_origin(jet_d(beta_jet)) - s0 * lambda;
  r.r4 = value_at_origin(jet_d(sigma_jet));
  r.r5 = value_at_origin(jet_d(p_full.star(sigma_jet))) + (p0.star(b0) * 2 - wedge(b0, s0)) / 3;
  r.r6 = value_at_origin(jet_d(p_full.star(beta_jet)));
  return r;
}

AltForm laplacian_identity_residual(const JetForm& sigma_jet) {
  const int order = jet_order_of(sigma_jet);
  if (order < 2) throw std::domain_error("laplacian_identity_residual: need order 2");
  require_closed(sigma_jet);

  // dτ route: the order-1 torsion jet differentiated once
  AltForm dtau = value_at_origin(jet_d(tau_jet(sigma_jet)));

  // Hodge route: Δσ = d(δσ) + δ(dσ), δ = (-1)^p ∗d∗ in dimension 7
  auto p_full = G2PointJet::from_three_form(sigma_jet);
  auto p_low = G2PointJet::from_three_form(truncate_order(sigma_jet, order - 1));
  JetForm delta_sigma = -p_low.star(jet_d(p_full.star(sigma_jet)));  // order 1, 2-form
  AltForm d_delta = value_at_origin(jet_d(delta_sigma));

  JetForm dsigma = jet_d(sigma_jet);  // order 1, identically zero for closed jets
  AltForm delta_d(3);
  if (!dsigma.is_zero()) {
    JetForm star_ds = p_low.star(dsigma);
    AltForm v = value_at_origin(jet_d(star_ds));
    auto p0 = G2Point::from_three_form(value_at_origin(sigma_jet));
    delta_d = p0.star(v);  // (+1) ∗d∗ on 4-forms
  }

  AltForm laplacian = d_delta + delta_d;
  return laplacian - dtau;
}

GradientObstruction gradient_obstruction(const FiberPoint& fp) {
  GradientObstruction g;
  const G2Point& p = fp.base;
  auto split = decompose2(p, fp.b);
  g.tau = split.b14;
  g.x = vector_from_beta7(p, split.b7);
  g.one_form = fp.b.is_zero() ? AltForm(1) : contract(g.x, g.tau);

  const AltForm& s = p.three_form();
  AltForm xf = flat(p, g.x);
  g.xflat_six_form = wedge(wedge(xf, g.tau), s);
  AltForm z = p.star(wedge(fp.b, p.star(s)));
  g.z_six_form = wedge(wedge(z, fp.b), s);
  g.proportionality_ok = (g.z_six_form == g.xflat_six_form * (-3));
  return g;
}

std::vector<AltForm> fiber_derivative(const DualFormMap& f, const std::vector<AltForm>& base,
                                      const std::vector<AltForm>& direction) {
  if (base.size() != direction.size())
    throw std::invalid_argument("fiber_derivative: base/direction arity mismatch");
  DualForms lifted;
  lifted.reserve(base.size());
  for (std::size_t i = 0; i < base.size(); ++i) {
    AltFormT<DualScalar> l(base[i].degree());
    for (const auto& [m, c] : base[i].terms()) {
      auto itd = direction[i].terms().find(m);
      l.set(m, DualScalar{c, itd != direction[i].terms().end() ? itd->second : zero_like(c)});
    }
    for (const auto& [m, c] : direction[i].terms())
      if (!base[i].terms().contains(m)) l.set(m, DualScalar{zero_like(c), c});
    lifted.push_back(std::move(l));
  }
  DualForms out = f(lifted);
  std::vector<AltForm> ders;
  ders.reserve(out.size());
  for (const auto& o : out) {
    AltForm d(o.degree());
    for (const auto& [m, c] : o.terms()) d.add(m, c.der);
    ders.push_back(std::move(d));
  }
  return ders;
}

}  // namespace g2eds
