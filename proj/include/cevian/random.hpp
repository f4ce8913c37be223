#pragma once

// SplitMix64 (Steele, Lea, Flood 2014):
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
// Every draw used by the sampler goes through this generator and the
// helpers below, so a seed gives the same sequence on every platform.

#include <cstdint>
#include <string_view>

#include "cevian/linalg.hpp"

namespace cevian {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [lo, hi] by rejection, no modulo bias.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// Numerator in [-bound, bound], denominator in [1, bound].
  Rat rational(std::int64_t bound);

 private:
  std::uint64_t state_;
};

/// FNV-1a, 64 bit.
std::uint64_t fnv1a(std::string_view text);
/// Seed for an indexed sub-stream: the first output of SplitMix64 seeded
/// with seed ^ (index * golden ratio), mixed with a label hash.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index, std::string_view label = {});

}  // namespace cevian
