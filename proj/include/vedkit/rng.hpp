#pragma once

#include <cmath>
#include <complex>
#include <cstdint>

namespace vedkit {

/// Deterministic 64-bit generator (splitmix64). Used everywhere seeds matter
/// so results do not depend on the standard library's distribution details.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform on the unit circle.
  std::complex<double> unitComplex() {
    const double phi = 2.0 * M_PI * uniform01();
    return {std::cos(phi), std::sin(phi)};
  }

 private:
  std::uint64_t state_;
};

/// Stable sub-seed derivation: independent streams per (seed, tag).
inline std::uint64_t subseed(std::uint64_t seed, std::uint64_t tag) {
  SplitMix64 g(seed ^ (tag * 0xA24BAED4963EE407ULL));
  return g.next();
}

}  // namespace vedkit
