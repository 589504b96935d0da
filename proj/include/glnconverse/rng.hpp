#pragma once

#include <cstdint>

namespace glnc {

// Deterministic 64-bit stream (splitmix64).  Used for probe schedules and
// random spectral combinations so that every run of the engine is
// reproducible from a single integer seed.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound).  bound must be positive.
  uint64_t below(uint64_t bound) { return next() % bound; }

  // Uniform double in [-1, 1).
  double sym() {
    return 2.0 * (double(next() >> 11) * (1.0 / 9007199254740992.0)) - 1.0;
  }
};

// Stable mixing of a small tuple into one seed.
inline uint64_t mix_seed(uint64_t a, uint64_t b) {
  uint64_t x = a * 0x9e3779b97f4a7c15ULL + 0x165667b19e3779f9ULL;
  x ^= b + 0x9e3779b97f4a7c15ULL + (x << 6) + (x >> 2);
  return x;
}

}  // namespace glnc
