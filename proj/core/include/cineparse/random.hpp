#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace cineparse {

// Reproducible random source: the engine's output sequence is pinned by the
// standard, and all derived draws below use explicit arithmetic instead of
// the library distributions, whose algorithms vary between implementations.
class StableRng {
 public:
  explicit StableRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, 1) with 53 significant bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Inclusive bounds; modulo bias is irrelevant at fixture scale.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  // Box-Muller, cosine branch only.
  double normal(double mean, double sigma) {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double mag = std::sqrt(-2.0 * std::log(u1));
    return mean + sigma * mag * std::cos(2.0 * 3.141592653589793 * u2);
  }

  // Normal draw clipped to +/- 3 sigma and rounded to an integer.
  std::int64_t normal_int(double mean, double sigma) {
    double v = normal(mean, sigma);
    const double lo = mean - 3.0 * sigma;
    const double hi = mean + 3.0 * sigma;
    if (v < lo) v = lo;
    if (v > hi) v = hi;
    return std::llround(v);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cineparse
