#pragma once

#include <cstdint>

namespace circwidth {

// SplitMix64: tiny splittable PRNG with a single 64-bit word of state.
// The exact output stream is part of this library's contract: every
// randomized generator is reproducible from (family, n, seed) alone, and
// reimplementations in other languages must produce identical graphs.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
  }

  // Uniform-ish integer in [0, bound) by plain modulo. The bias is
  // negligible for the small bounds used here and keeping the reduction
  // trivial makes the stream easy to replicate elsewhere.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

}  // namespace circwidth
