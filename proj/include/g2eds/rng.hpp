#pragma once

#include <cstdint>

namespace g2eds {

// splitmix64. Every "random" quantity in the library and the test suite is
// drawn through this generator, so any result can be reproduced from the seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // uniform integer in [-m, m]
  long signed_int(long m) {
    return static_cast<long>(below(static_cast<std::uint64_t>(2 * m + 1))) - m;
  }

  // derive an independent stream (e.g. one per sample index)
  SplitMix64 fork(std::uint64_t salt) const {
    SplitMix64 g(state_ ^ (0xd1342543de82ef95ULL * (salt + 1)));
    g.next();
    return g;
  }

 private:
  std::uint64_t state_;
};

}  // namespace g2eds
