#pragma once

#include <cstdint>
#include <random>

namespace kerrbell {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits. Unlike
/// std::uniform_real_distribution this is identical across standard libraries.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Independent stream for trial `index` of a campaign seeded with `seed`.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

}  // namespace kerrbell
