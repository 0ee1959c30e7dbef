#pragma once

#include <cstdint>
#include <random>

namespace essgb {

/// SplitMix64 step; used to expand a user seed into generator state.
std::uint64_t splitmix64(std::uint64_t& state);

/// Reproducible residue source: std::mt19937_64 (fully specified by the
/// standard) seeded through SplitMix64. Draws are unbiased: raw values at or
/// above floor((2^64 - 1) / bound) * bound are rejected and redrawn.
class ResidueSampler {
 public:
  explicit ResidueSampler(std::uint64_t seed);

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t uniform(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace essgb
