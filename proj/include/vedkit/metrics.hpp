#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <string>

namespace vedkit {

/// Gram matrix of a scalar product on Sym^2(C^3) in the fixed coordinate
/// order (x11, x12, x13, x22, x23, x33).
using Gram = Eigen::Matrix<double, 6, 6>;

/// Gram of the Bombieri-Weyl product: sum x_ii^2 + 2 sum_{i<j} x_ij^2.
Gram bw_gram();

/// Relative invertibility threshold: smallest singular value must be at least
/// 1e-8 times the largest.
bool gram_invertible(const Gram& g);

struct MetricSpec {
  enum class Kind { GenericRandom, BombieriWeyl, Diagonal, Explicit };

  Kind kind = Kind::BombieriWeyl;
  std::uint64_t seed = 0;  // meaningful for GenericRandom
  Gram gram = bw_gram();

  std::string name() const;
};

MetricSpec bw_metric();

/// Symmetric 6x6 gram with entries uniform in [-1, 1], seeded and resampled
/// (at most 100 times) until invertible.
MetricSpec random_metric(std::uint64_t seed);

/// Diagonal gram from six positive weights on the Sym^2 coordinates.
MetricSpec diag_family_metric(const std::array<double, 6>& a);

/// Arbitrary symmetric invertible gram.
MetricSpec explicit_metric(const Gram& g);

}  // namespace vedkit
