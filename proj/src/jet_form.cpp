#include "g2eds/jet_form.hpp"

#include "g2eds/g2_point.hpp"

namespace g2eds {

JetForm jet_d(const JetForm& a) {
  if (a.degree() >= kDim) throw std::domain_error("jet_d: degree-7 form");
  int order = -1;
  for (const auto& [m, c] : a.terms()) {
    order = c.order();
    break;
  }
  if (order == 0) throw std::domain_error("jet_d: order-0 jet");
  JetForm r(a.degree() + 1);
  for (const auto& [m, c] : a.terms())
    for (int axis = 0; axis < kDim; ++axis) {
      if (m & (1 << axis)) continue;
      JetScalar dc = c.derivative(axis);
      if (dc.is_zero()) continue;
      int s = wedge_sign(static_cast<Mask>(1 << axis), m);
      r.add(static_cast<Mask>(m | (1 << axis)), s < 0 ? -dc : dc);
    }
  return r;
}

JetForm constant_jet(const AltForm& a, int order) {
  JetForm r(a.degree());
  for (const auto& [m, c] : a.terms()) r.set(m, JetScalar::constant(order, c));
  return r;
}

AltForm value_at_origin(const JetForm& a) {
  AltForm r(a.degree());
  for (const auto& [m, c] : a.terms()) r.add(m, c.value());
  return r;
}

AltForm eval_jet(const JetForm& a, const std::array<Scalar, 7>& u) {
  AltForm r(a.degree());
  for (const auto& [m, c] : a.terms()) r.add(m, c.eval(u));
  return r;
}

JetForm promote_order(const JetForm& a, int order) {
  JetForm r(a.degree());
  for (const auto& [m, c] : a.terms()) {
    JetScalar j(order);
    for (const auto& [k, v] : c.terms()) j.set(k, v);
    r.set(m, j);
  }
  return r;
}

JetForm truncate_order(const JetForm& a, int order) {
  JetForm r(a.degree());
  for (const auto& [m, c] : a.terms()) r.add(m, c.truncated(order));
  return r;
}

JetForm jet_to_floating(const JetForm& a, int precision_bits) {
  JetForm r(a.degree());
  for (const auto& [m, c] : a.terms()) {
    JetScalar j(c.order());
    for (const auto& [k, v] : c.terms()) j.set(k, v.to_floating(precision_bits));
    r.set(m, j);
  }
  return r;
}

JetForm random_form_jet(SplitMix64& rng, int degree, int order, long max_num, long den) {
  JetForm r(degree);
  const int keys = mono_count(order);
  for (Mask m : masks_of_degree(degree)) {
    JetScalar c(order);
    for (int k = 0; k < keys; ++k) {
      long num = rng.signed_int(max_num);
      if (num != 0) c.set(static_cast<MonoKey>(k), Scalar::fraction(num, den));
    }
    if (!c.is_zero()) r.set(m, c);
  }
  return r;
}

namespace {

JetForm closed_jet_impl(std::uint64_t seed, int order, bool pin_origin) {
  if (order < 1 || order > 2)
    throw std::invalid_argument("closed_sigma_jet: order must be 1 or 2");
  SplitMix64 rng(seed);
  long scale_den = 64;
  for (;;) {
    SplitMix64 r = rng.fork(static_cast<std::uint64_t>(scale_den));
    JetForm eta = random_form_jet(r, 2, order + 1, 4, scale_den);
    if (pin_origin) {
      // dropping eta's linear monomials makes d(eta) vanish at the origin
      JetForm trimmed(2);
      for (const auto& [m, c] : eta.terms()) {
        JetScalar t(c.order());
        for (const auto& [k, v] : c.terms())
          if (mono_degree(k) != 1) t.set(k, v);
        if (!t.is_zero()) trimmed.set(m, t);
      }
      eta = trimmed;
    }
    JetForm sigma = constant_jet(standard_three_form(), order) + truncate_order(jet_d(eta), order);
    std::array<Scalar, 49> bval{};
    auto B = bilinear_form(value_at_origin(sigma));
    for (int i = 0; i < 49; ++i) bval[i] = B[i];
    if (classify_definiteness(bval) == Definiteness::positive) return sigma;
    scale_den *= 2;  // shrink the perturbation and retry (not observed in practice)
  }
}

}  // namespace

JetForm closed_sigma_jet(std::uint64_t seed, int order) {
  return closed_jet_impl(seed, order, false);
}

JetForm closed_sigma_jet_pinned(std::uint64_t seed, int order) {
  return closed_jet_impl(seed, order, true);
}

JetForm random_definite_jet(std::uint64_t seed, int order) {
  SplitMix64 rng(seed);
  long scale_den = 64;
  for (;;) {
    SplitMix64 r = rng.fork(static_cast<std::uint64_t>(scale_den));
    JetForm sigma =
        constant_jet(standard_three_form(), order) + random_form_jet(r, 3, order, 4, scale_den);
    std::array<Scalar, 49> bval{};
    auto B = bilinear_form(value_at_origin(sigma));
    for (int i = 0; i < 49; ++i) bval[i] = B[i];
    if (classify_definiteness(bval) == Definiteness::positive) return sigma;
    scale_den *= 2;
  }
}

}  // namespace g2eds
