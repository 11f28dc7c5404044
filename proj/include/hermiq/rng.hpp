#pragma once

#include <cstdint>

#include "hermiq/varieties.hpp"

namespace hermiq {

/// splitmix64, the documented generator behind every sampled scan.
/// Draws below n use rejection, so they are exactly uniform.
struct SplitMix64 {
  std::uint64_t state = 0;
  explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~0ULL - ~0ULL % n;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return r % n;
  }
};

inline Fq2Elem draw_fq2(const Field& F, SplitMix64& rng) {
  return F.element2(static_cast<int>(rng.below(F.q2())));
}

/// Uniform coefficient tuple with (a,b,c) != (0,0,0).
inline QuadricCoeffs draw_quadric(const Field& F, SplitMix64& rng) {
  for (;;) {
    const Fq2Elem a = draw_fq2(F, rng), b = draw_fq2(F, rng), c = draw_fq2(F, rng);
    if (a == F.zero2() && b == F.zero2() && c == F.zero2()) continue;
    return {a, b, c, draw_fq2(F, rng), draw_fq2(F, rng), draw_fq2(F, rng)};
  }
}

/// Uniform over tuples of the given quadric type.
inline QuadricCoeffs draw_quadric_of_type(const Field& F, SplitMix64& rng, QuadricType t) {
  for (;;) {
    const QuadricCoeffs qc = draw_quadric(F, rng);
    if (quadric_type(F, qc) == t) return qc;
  }
}

}  // namespace hermiq
