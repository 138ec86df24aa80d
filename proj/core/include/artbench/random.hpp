#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

namespace artbench {

/// Reproducibility helpers built on std::mt19937_64, whose output sequence is
/// fixed by the C++ standard. The standard *distributions* are
/// implementation-defined, so every draw below is derived from raw engine
/// words only; the same seed yields the same stream on every platform.
namespace rng {

inline std::mt19937_64 engine(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Uniform integer in [0, bound) by rejection sampling. bound must be > 0.
inline std::uint64_t next_below(std::mt19937_64& g, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t v;
  do {
    v = g();
  } while (v >= limit);
  return v % bound;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double next_unit(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double next_range(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * next_unit(g);
}

/// Standard normal via Box-Muller (one value per call, cosine branch).
inline double next_normal(std::mt19937_64& g) {
  double u1 = next_unit(g);
  while (u1 <= 0.0) u1 = next_unit(g);
  const double u2 = next_unit(g);
  constexpr double two_pi = 6.283185307179586476925286766559;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

/// Fisher-Yates shuffle driven by next_below.
template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& g) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(next_below(g, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace rng
}  // namespace artbench
