#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vedkit/polysys.hpp"

namespace vedkit {

struct TrackerConfig {
  double initialStep = 0.05;   // also the maximum step
  double minStep = 1e-7;
  double newtonTol = 1e-11;
  int maxNewtonIters = 5;
  double divergenceNorm = 1e8;
  double endgameStart = 0.95;
  double singularCondThreshold = 1e12;
  double dedupeTol = 1e-6;

  void validate() const;
};

enum class PathStatus { Converged, Diverged, SingularEndpoint, StepFailure };

const char* to_string(PathStatus s);

struct PathResult {
  PathStatus status = PathStatus::StepFailure;
  VecXc endpoint;
  /// Normalized backward-error residual |F(z)|_inf / (1 + |z|_inf)^d. The
  /// raw |F| of a degree-d system has a double-precision floor of about
  /// (1 + |z|)^d * eps, so classification must be scale-relative or genuine
  /// large-norm critical points would be rejected.
  double residual = 0.0;
  double conditionEstimate = 0.0;
  int stepsTaken = 0;
};

/// A one-parameter family H(x, t), t in [0, 1], with H(., 1) proportional to
/// the target system the endpoints are polished against.
class HomotopyBase {
 public:
  virtual ~HomotopyBase() = default;
  virtual int nvars() const = 0;
  virtual VecXc H(const VecXc& z, double t) const = 0;
  virtual MatXc Hx(const VecXc& z, double t) const = 0;
  virtual VecXc Ht(const VecXc& z, double t) const = 0;
  virtual VecXc targetEval(const VecXc& z) const = 0;
  virtual MatXc targetJacobian(const VecXc& z) const = 0;
  /// Largest total degree among the equations; bounds how fast residuals grow
  /// with the point norm (mid-path correction accepts relative to this scale).
  virtual int maxDegree() const = 0;
};

/// The gamma-trick straight line H(x,t) = (1-t) G(x) + gamma t F(x).
class Homotopy : public HomotopyBase {
 public:
  Homotopy(const PolySystem& start, const PolySystem& target, Cplx gamma);

  int nvars() const override { return start_->nvars(); }
  VecXc H(const VecXc& z, double t) const override;
  MatXc Hx(const VecXc& z, double t) const override;
  VecXc Ht(const VecXc& z, double t) const override;
  VecXc targetEval(const VecXc& z) const override { return target_->eval(z); }
  MatXc targetJacobian(const VecXc& z) const override { return target_->jacobian(z); }
  int maxDegree() const override;

  Cplx gamma() const { return gamma_; }

 private:
  const PolySystem* start_;
  const PolySystem* target_;
  Cplx gamma_;
};

/// Total-degree start system G_i = x_i^{d_i} - r_i with unit-modulus r_i and
/// its full set of prod d_i known roots.
struct StartSystem {
  PolySystem system;
  std::vector<VecXc> points;
};

StartSystem total_degree_start(std::span<const int> degrees, std::uint64_t seed);

/// Tracks one path per start point (input order preserved): RK4 prediction of
/// the Davidenko flow, Newton correction at each accepted step, adaptive step
/// halving/doubling, final Newton polish against the target system.
std::vector<PathResult> track(const HomotopyBase& h, std::span<const VecXc> starts,
                              const TrackerConfig& cfg, int threads = 1);

}  // namespace vedkit
