#pragma once

#include <cstdint>

namespace fm {

// splitmix64: tiny, fully deterministic across platforms (std distributions
// are not), more than enough for test-case sampling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  // uniform in [lo, hi]
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  bool chance(int num, int den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

}  // namespace fm
