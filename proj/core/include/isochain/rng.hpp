#pragma once

#include <cstdint>

namespace isochain {

// Counter-based 64-bit generator (SplitMix64 stream): draw n of a seed is
// mix(seed + (n+1) * golden_gamma). Stateless, so disorder realizations are
// bit-reproducible across platforms and thread layouts.
inline std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t n) {
  std::uint64_t z = seed + (n + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Uniform on [0, 1) with 53 mantissa bits.
inline double uniform01(std::uint64_t seed, std::uint64_t n) {
  return static_cast<double>(splitmix64(seed, n) >> 11) * 0x1.0p-53;
}

// Uniform on [-v, v). v = 0 yields exactly 0.
inline double uniform_symmetric(std::uint64_t seed, std::uint64_t n, double v) {
  return v * (2.0 * uniform01(seed, n) - 1.0);
}

}  // namespace isochain
