#pragma once

#include <cstdint>
#include <random>

namespace colearn {

using Rng = std::mt19937_64;

// Distributions are hand-rolled on top of the raw engine output so that
// streams are identical across standard libraries and platforms.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Fixed splitting rule for per-run seeds; documented in the README so
// individual runs of a sweep can be reproduced standalone.
inline std::uint64_t derive_run_seed(std::uint64_t master_seed, int run_index) {
  return splitmix64(splitmix64(master_seed) ^
                    (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(run_index + 1)));
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [lo, hi], inclusive.
inline int uniform_int(Rng& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

}  // namespace colearn
