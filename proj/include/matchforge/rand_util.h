// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

// Hand-rolled draws on top of mt19937_64. <random> distributions are
// implementation-defined, so byte-identical reproducibility across
// toolchains requires owning the mapping from raw bits to values.
namespace matchforge::rng {

// splitmix64 finalizer; decorrelates derived seeds
inline std::uint64_t mix(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
  return mix(seed ^ mix(index));
}

// [0, 1), 53-bit mantissa
inline double unit(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * unit(g);
}

// unbiased integer in [0, n); n >= 1
inline std::uint64_t below(std::mt19937_64& g, std::uint64_t n) {
  const std::uint64_t min = (0 - n) % n;  // 2^64 mod n
  std::uint64_t x = g();
  while (x < min) x = g();
  return x % n;
}

// Box-Muller, cosine branch; consumes exactly two draws
inline double normal(std::mt19937_64& g, double mean, double stddev) {
  const double u1 = 1.0 - unit(g);  // (0, 1], keeps log finite
  const double u2 = unit(g);
  const double r = std::sqrt(-2.0 * std::log(u1));
  return mean + stddev * (r * std::cos(2.0 * std::numbers::pi * u2));
}

}  // namespace matchforge::rng
