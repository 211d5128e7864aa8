#pragma once

#include <cstdint>

namespace alef {

// SplitMix64 (Steele, Lea, Flood; public-domain reference implementation).
// Chosen because every seed gives a full-period 64-bit stream, the state is
// a single word, and independent streams can be derived from (seed, index)
// pairs without coordination. All randomized operations in this project
// (Monte Carlo walks, synthetic generation, randomized fill) draw from it,
// and output metadata records "rng: splitmix64" so runs can be reproduced.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Integer in [0, n) via 128-bit fixed-point multiply (Lemire). The
  // modulo bias is below n / 2^64, which is negligible for every n this
  // project draws, and the mapping is exactly reproducible.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // Independent stream for a (seed, index) pair. The initial state is the
  // avalanche mix of both words, so streams for distinct indices start at
  // effectively unrelated points of the underlying sequence.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(mix(seed ^ mix(index + 0x9e3779b97f4a7c15ULL)));
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace alef
