#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace g2eds {

// A multi-index e^{i1...ip} with 1 <= i1 < ... < ip <= 7 is packed into a
// 7-bit mask: bit k (0-based) set  <=>  axis k+1 present. The increasing-index
// basis element is the positive one; all signs come from inversion counting.
using Mask = std::uint8_t;

inline constexpr int kDim = 7;
inline constexpr Mask kFullMask = 0x7f;

inline int mask_degree(Mask m) { return std::popcount(static_cast<unsigned>(m)); }

int binomial(int n, int k);

/// Degree-p masks in increasing numeric order (the canonical basis order).
const std::vector<Mask>& masks_of_degree(int p);

/// Position of m within masks_of_degree(mask_degree(m)).
int mask_index(Mask m);

/// Sign of e^a ∧ e^b relative to e^{a|b}; 0 if a and b overlap.
int wedge_sign(Mask a, Mask b);

/// Sign of e_axis ⌟ e^m (axis is 0-based and must be present in m):
/// (-1)^(number of set bits of m below axis).
int contraction_sign(int axis, Mask m);

/// Axes of m as 0-based indices, increasing.
std::vector<int> mask_axes(Mask m);

/// "135"-style label (1-based axes, increasing).
std::string mask_label(Mask m);
Mask mask_from_label(const std::string& label);

/// User-facing view of a multi-index (the JSON layer works with labels).
struct MultiIndex {
  Mask bits = 0;
  int degree() const { return mask_degree(bits); }
  std::string label() const { return mask_label(bits); }
};

}  // namespace g2eds
