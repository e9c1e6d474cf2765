#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>

#include "vedkit/metrics.hpp"
#include "vedkit/polysys.hpp"

namespace vedkit {

using Vec6c = Eigen::Matrix<Cplx, 6, 1>;
using Vec7c = Eigen::Matrix<Cplx, 7, 1>;

/// Data point in Sym^2(C^3) the distance is measured from.
struct TargetPoint {
  Vec6c u = Vec6c::Zero();
  bool onVariety = false;  // set when det(U) is numerically zero
};

/// Complex target with real and imaginary parts uniform in [-1, 1].
TargetPoint random_target(std::uint64_t seed);

/// The ED-critical system for the cubic symmetroid {det X = 0} under a
/// metric Q and target u:
///   det(X) = 0,   Q (x - u) - lambda * grad det(X) = 0,
/// seven cubic polynomials in seven unknowns (x1..x6, lambda).
class LagrangeSystem {
 public:
  static constexpr int kNumVars = 7;

  LagrangeSystem(const MetricSpec& metric, const TargetPoint& target);

  const PolySystem& polynomials() const { return sys_; }
  const std::array<int, 7>& degrees() const { return degrees_; }
  long bezout() const;  // product of the degrees = 3^7

  VecXc eval(const VecXc& z) const { return sys_.eval(z); }
  MatXc jacobian(const VecXc& z) const { return sys_.jacobian(z); }

  const MetricSpec& metric() const { return metric_; }
  const TargetPoint& target() const { return target_; }

 private:
  MetricSpec metric_;
  TargetPoint target_;
  PolySystem sys_;
  std::array<int, 7> degrees_{};
};

}  // namespace vedkit
