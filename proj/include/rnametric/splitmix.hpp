#pragma once

#include <cstdint>

namespace rnametric {

/// SplitMix64. The state advances by 0x9E3779B97F4A7C15 per draw and the
/// output is the standard two-round xor-shift-multiply finalizer, so any
/// language can reproduce a stream from its seed.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// next() % bound; bound must be positive.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

private:
  std::uint64_t state_;
};

}  // namespace rnametric
