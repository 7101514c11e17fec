#include "g2eds/multi_index.hpp"

#include <stdexcept>

namespace g2eds {

int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

namespace {

struct MaskTables {
  std::array<std::vector<Mask>, 8> by_degree;
  std::array<int, 128> index_within_degree{};

  MaskTables() {
    for (Mask m = 0;; ++m) {
      int d = mask_degree(m);
      index_within_degree[m] = static_cast<int>(by_degree[d].size());
      by_degree[d].push_back(m);
      if (m == kFullMask) break;
    }
  }
};

const MaskTables& tables() {
  static const MaskTables t;
  return t;
}

}  // namespace

const std::vector<Mask>& masks_of_degree(int p) {
  if (p < 0 || p > kDim) throw std::out_of_range("masks_of_degree: degree");
  return tables().by_degree[p];
}

int mask_index(Mask m) { return tables().index_within_degree[m & kFullMask]; }

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // count pairs (i in a, j in b) with j < i
  int inversions = 0;
  for (int i = 0; i < kDim; ++i)
    if (a & (1 << i)) inversions += std::popcount(static_cast<unsigned>(b & ((1 << i) - 1)));
  return (inversions % 2 == 0) ? 1 : -1;
}

int contraction_sign(int axis, Mask m) {
  int below = std::popcount(static_cast<unsigned>(m & ((1 << axis) - 1)));
  return (below % 2 == 0) ? 1 : -1;
}

std::vector<int> mask_axes(Mask m) {
  std::vector<int> axes;
  for (int i = 0; i < kDim; ++i)
    if (m & (1 << i)) axes.push_back(i);
  return axes;
}

std::string mask_label(Mask m) {
  std::string s;
  for (int i = 0; i < kDim; ++i)
    if (m & (1 << i)) s += static_cast<char>('1' + i);
  return s;
}

Mask mask_from_label(const std::string& label) {
  Mask m = 0;
  int prev = 0;
  for (char c : label) {
    if (c < '1' || c > '7') throw std::invalid_argument("multi-index label: " + label);
    int axis = c - '1' + 1;
    if (axis <= prev) throw std::invalid_argument("multi-index label not increasing: " + label);
    prev = axis;
    m |= static_cast<Mask>(1 << (axis - 1));
  }
  return m;
}

}  // namespace g2eds
