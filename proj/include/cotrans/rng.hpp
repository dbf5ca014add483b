#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace cotrans {

// Deterministic random source. mt19937_64 output is fixed by the standard;
// the value derivations below avoid std::*_distribution, whose results are
// implementation-defined, so identical seeds give identical streams on every
// platform (needed for byte-identical reports).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(bits() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  // Uniform index in [0, n).
  std::size_t index(std::size_t n) { return n == 0 ? 0 : bits() % n; }

  // Uniform integer in [lo, hi] inclusive.
  long integer(long lo, long hi) {
    return lo + static_cast<long>(index(static_cast<std::size_t>(hi - lo + 1)));
  }

  // Standard normal via Box-Muller on the deterministic uniforms.
  double gauss() {
    double u1 = uniform(0.0, 1.0);
    while (u1 <= 0.0) u1 = uniform(0.0, 1.0);
    const double u2 = uniform(0.0, 1.0);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cotrans
