#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>
#include <span>
#include <utility>

namespace regshift {

// All randomness goes through std::mt19937_64, whose output sequence is fixed
// by the standard. Distributions are implemented here rather than taken from
// <random> because the library's distribution algorithms are unspecified and
// differ between standard library implementations.
//
// Splitting rule: the substream for a path (seed, k1, k2, ...) is seeded with
//   h0 = splitmix64(seed), h_{i} = splitmix64(h_{i-1} ^ splitmix64(k_i + i))
// so every (seed, path) pair gets an independent, reproducible generator.
using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = splitmix64(seed);
  std::uint64_t i = 1;
  for (std::uint64_t k : path) {
    h = splitmix64(h ^ splitmix64(k + i));
    ++i;
  }
  return h;
}

inline Rng substream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  return Rng(derive_seed(seed, path));
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Standard normal by Box-Muller; spelled out so streams match across standard libraries.
inline double normal01(Rng& rng) {
  const double u1 = 1.0 - uniform01(rng);  // (0, 1]
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

/// Uniform integer in [0, n) by rejection; n must be positive.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

/// Fisher-Yates shuffle with a portable index draw.
template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

/// Draws an index from unnormalised non-negative weights summing to `total`.
inline std::size_t sample_categorical(std::span<const double> weights, double total, Rng& rng) {
  const double u = uniform01(rng) * total;
  double acc = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    last_positive = i;
    acc += weights[i];
    if (u < acc) return i;
  }
  // Rounding can leave u just above the accumulated total.
  return last_positive;
}

}  // namespace regshift
