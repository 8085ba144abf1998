#pragma once

// Deterministic, platform-stable pseudo-randomness for instance generation
// (splitmix64). std::uniform_int_distribution is implementation-defined, so
// sampling is done by hand here; identical seeds must give identical instances
// on every platform.

#include <cstdint>

namespace linewalk {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n), n >= 1. Rejection sampling keeps it unbiased.
  int below(int n) {
    std::uint64_t bound = static_cast<std::uint64_t>(n);
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return static_cast<int>(x % bound);
  }

  bool chance(int num, int den) { return below(den) < num; }

 private:
  std::uint64_t state_;
};

}  // namespace linewalk
