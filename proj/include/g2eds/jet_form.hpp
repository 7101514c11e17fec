#pragma once

#include "g2eds/alt_form.hpp"
#include "g2eds/rng.hpp"

namespace g2eds {

/// p-form whose coefficients are truncated Taylor polynomials (order <= 2 in
/// public surfaces) at the origin of R^7.
using JetForm = AltFormT<JetScalar>;

/// Exterior derivative: degree +1, order -1. Linear, graded Leibniz, and
/// d∘d = 0 whenever the order allows two applications.
JetForm jet_d(const JetForm& a);

/// Constant-coefficient embedding of an AltForm at the given order.
JetForm constant_jet(const AltForm& a, int order);

AltForm value_at_origin(const JetForm& a);

/// Evaluate all coefficients at a point u.
AltForm eval_jet(const JetForm& a, const std::array<Scalar, 7>& u);

JetForm promote_order(const JetForm& a, int order);
JetForm truncate_order(const JetForm& a, int order);

/// Convert every coefficient to float mode at the given precision.
JetForm jet_to_floating(const JetForm& a, int precision_bits);

/// sigma-jet = phi0 + d(eta) for a seeded pseudorandom 2-form eta with small
/// polynomial coefficients of degree <= order+1, so the result is exactly
/// closed and definite at the origin. The origin value generally differs from
/// phi0 by the constant part of d(eta).
JetForm closed_sigma_jet(std::uint64_t seed, int order);

/// Same construction with eta's degree-1 monomials dropped: the origin value
/// is exactly phi0, keeping the exact-rational star path available.
JetForm closed_sigma_jet_pinned(std::uint64_t seed, int order);

/// Seeded definite but generically non-closed 3-form jet near phi0.
JetForm random_definite_jet(std::uint64_t seed, int order);

/// Seeded polynomial jet of a p-form with numerators <= max_num over den.
JetForm random_form_jet(SplitMix64& rng, int degree, int order, long max_num, long den);

}  // namespace g2eds
