#pragma once

// Deterministic seeded generator (splitmix64 / xoshiro256++). Sampling loops
// draw from fixed per-chunk substreams so results do not depend on how the
// work is scheduled.

#include <cstdint>

#include "affdia/rational.hpp"

namespace affdia {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(uint64_t seed) {
    uint64_t sm = seed;
    for (auto& w : s_) w = splitmix64(sm);
  }

  // Substream `stream` of a master seed; used for chunked sampling.
  Rng(uint64_t seed, uint64_t stream) : Rng(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1))) {}

  uint64_t next() {
    auto rotl = [](uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
    const uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n).
  uint64_t below(uint64_t n) { return next() % n; }

  long long integer(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
  }

  // Exact rational with denominator 2^16, uniform over [lo, hi].
  Rat rational(const Rat& lo, const Rat& hi) {
    Rat t = make_rat(static_cast<long long>(below(65537)), 65536);
    return lo + t * (hi - lo);
  }

 private:
  uint64_t s_[4] = {};
};

}  // namespace affdia
