#pragma once

#include <array>
#include <optional>
#include <vector>

#include "g2eds/multi_index.hpp"

namespace g2eds {

/// All k-by-k minors of a 7x7 ring matrix, built level by level with Laplace
/// expansion along the lowest row. minor(rows, cols) is indexed by the two
/// degree-k masks. Level k costs C(7,k)^2 * k ring multiplications.
template <typename R>
class MinorTable {
 public:
  explicit MinorTable(std::array<R, 49> m) : m_(std::move(m)) {}

  const R& minor(Mask rows, Mask cols) const {
    int k = mask_degree(rows);
    build(k);
    return levels_[k]->at(mask_index(rows) * binomial(7, k) + mask_index(cols));
  }

 private:
  void build(int k) const {
    if (k == 0 || (static_cast<int>(levels_.size()) > k && levels_[k])) return;
    if (static_cast<int>(levels_.size()) <= k) levels_.resize(k + 1);
    if (k > 1) build(k - 1);
    const auto& rows_k = masks_of_degree(k);
    std::vector<R> lvl;
    lvl.reserve(rows_k.size() * rows_k.size());
    for (Mask rmask : rows_k) {
      int r0 = mask_axes(rmask)[0];  // expand along the lowest row
      Mask rrest = rmask & static_cast<Mask>(~(1 << r0));
      for (Mask cmask : rows_k) {
        std::optional<R> acc;
        int colpos = 0;
        for (int c = 0; c < kDim; ++c) {
          if (!(cmask & (1 << c))) continue;
          const R& entry = m_[r0 * 7 + c];
          R term = (k == 1)
                       ? entry
                       : entry * levels_[k - 1]->at(
                                     mask_index(rrest) * binomial(7, k - 1) +
                                     mask_index(cmask & static_cast<Mask>(~(1 << c))));
          if (colpos % 2 == 1) term = -term;
          if (acc)
            *acc += term;
          else
            acc = term;
          ++colpos;
        }
        lvl.push_back(*acc);
      }
    }
    levels_[k] = std::move(lvl);
  }

  std::array<R, 49> m_;
  mutable std::vector<std::optional<std::vector<R>>> levels_;
};

}  // namespace g2eds
