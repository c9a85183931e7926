#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

#include "ggrover/error.hpp"
#include "ggrover/types.hpp"

namespace ggrover {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// 64-bit mix of (master seed, stream index): the substream scheme used by
/// every seeded experiment, so trial k's draws are independent of scheduling.
inline constexpr std::uint64_t mix64(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ (0x9e3779b97f4a7c15ULL + index));
}

/// Seeded generator with a fixed, platform-independent mapping from engine
/// output to doubles. std::normal_distribution is implementation-defined, so
/// the Gaussian is a Box-Muller pair over an explicit 53-bit uniform; results
/// are bit-for-bit reproducible for a given seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng substream(std::uint64_t master, std::uint64_t index) {
    return Rng(mix64(master, index));
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    if (has_cached_) {
      has_cached_ = false;
      return cached_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * pi * u2;
    cached_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
  }

  /// Independent standard normals in the real and imaginary parts.
  Complex complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
  }

  /// Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    return engine_() % bound;
  }

  /// Inverse-CDF draw from nonnegative weights (need not be normalized).
  std::size_t pick_weighted(std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w;
    if (!(total > 0.0)) throw Error(errc::out_of_range, "pick_weighted: weights sum to zero");
    double u = uniform01() * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      u -= weights[i];
      if (u < 0.0) return i;
    }
    return weights.size() - 1;
  }

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace ggrover
