#include "vedkit/solutions.hpp"

#include <algorithm>
#include <stdexcept>

#include "vedkit/detforms.hpp"
#include "vedkit/rng.hpp"

namespace vedkit {
namespace {

bool lex_less(const VecXc& a, const VecXc& b) {
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    if (a(k).real() != b(k).real()) return a(k).real() < b(k).real();
    if (a(k).imag() != b(k).imag()) return a(k).imag() < b(k).imag();
  }
  return false;
}

double inf_dist(const VecXc& a, const VecXc& b) { return (a - b).lpNorm<Eigen::Infinity>(); }

constexpr std::uint64_t kTagStart = 0x5741;
constexpr std::uint64_t kTagGamma = 0x6A44;
constexpr std::uint64_t kTagArc = 0xA4C0;

// Straight segment between two Lagrange instances, traversed along the
// complex arc s(tau) = tau + c tau (1 - tau) so the real discriminant locus
// is avoided; endpoints are exact.
class ParameterPath : public HomotopyBase {
 public:
  ParameterPath(const LagrangeSystem& base, const LagrangeSystem& target, Cplx arc)
      : target_(&target), arc_(arc) {
    q0_ = base.metric().gram.cast<Cplx>();
    dq_ = target.metric().gram.cast<Cplx>() - q0_;
    u0_ = base.target().u;
    du_ = target.target().u - u0_;
  }

  int nvars() const override { return 7; }

  VecXc H(const VecXc& z, double t) const override {
    const Cplx s = arcPos(t);
    const Vec6c x = z.head<6>();
    const Cplx lam = z(6);
    const Eigen::Matrix<Cplx, 6, 6> q = q0_ + s * dq_;
    const Vec6c u = u0_ + s * du_;
    VecXc out(7);
    out(0) = sym3_det<Cplx>(x);
    out.tail<6>() = q * (x - u) - lam * sym3_det_grad<Cplx>(x);
    return out;
  }

  MatXc Hx(const VecXc& z, double t) const override {
    const Cplx s = arcPos(t);
    const Vec6c x = z.head<6>();
    const Cplx lam = z(6);
    const Eigen::Matrix<Cplx, 6, 6> q = q0_ + s * dq_;
    MatXc j = MatXc::Zero(7, 7);
    const Vec6c g = sym3_det_grad<Cplx>(x);
    j.row(0).head<6>() = g.transpose();
    j.block<6, 6>(1, 0) = q - lam * sym3_det_hess<Cplx>(x);
    j.col(6).tail<6>() = -g;
    return j;
  }

  VecXc Ht(const VecXc& z, double t) const override {
    const Cplx s = arcPos(t);
    const Cplx ds = arcVel(t);
    const Vec6c x = z.head<6>();
    const Eigen::Matrix<Cplx, 6, 6> q = q0_ + s * dq_;
    const Vec6c u = u0_ + s * du_;
    VecXc out = VecXc::Zero(7);
    out.tail<6>() = ds * (dq_ * (x - u) - q * du_);
    return out;
  }

  VecXc targetEval(const VecXc& z) const override { return target_->eval(z); }
  MatXc targetJacobian(const VecXc& z) const override { return target_->jacobian(z); }
  int maxDegree() const override { return 3; }

 private:
  Cplx arcPos(double t) const { return Cplx(t, 0) + arc_ * t * (1.0 - t); }
  Cplx arcVel(double t) const { return Cplx(1, 0) + arc_ * (1.0 - 2.0 * t); }

  const LagrangeSystem* target_;
  Cplx arc_;
  Eigen::Matrix<Cplx, 6, 6> q0_, dq_;
  Vec6c u0_, du_;
};

}  // namespace

SolutionSet classify(std::span<const PathResult> results, const TrackerConfig& cfg) {
  SolutionSet set;
  set.pathsTracked = static_cast<int>(results.size());

  std::vector<const PathResult*> kept;
  for (const PathResult& r : results) {
    switch (r.status) {
      case PathStatus::Converged: ++set.tally.converged; break;
      case PathStatus::Diverged: ++set.tally.diverged; break;
      case PathStatus::SingularEndpoint: ++set.tally.singular; break;
      case PathStatus::StepFailure: ++set.tally.stepFailure; break;
    }
    if (r.status == PathStatus::Converged && r.endpoint.lpNorm<Eigen::Infinity>() < cfg.divergenceNorm &&
        r.conditionEstimate < cfg.singularCondThreshold)
      kept.push_back(&r);
  }

  std::sort(kept.begin(), kept.end(),
            [](const PathResult* a, const PathResult* b) { return lex_less(a->endpoint, b->endpoint); });

  for (const PathResult* r : kept) {
    set.maxResidual = std::max(set.maxResidual, r->residual);
    bool merged = false;
    for (const VecXc& rep : set.solutions) {
      if (inf_dist(rep, r->endpoint) <= cfg.dedupeTol) {
        merged = true;
        break;
      }
    }
    if (!merged) set.solutions.push_back(r->endpoint);
  }
  set.count = static_cast<int>(set.solutions.size());
  return set;
}

SolutionSet ed_count(const MetricSpec& metric, const TargetPoint& u, const TrackerConfig& cfg,
                     std::uint64_t seed, int threads) {
  const LagrangeSystem sys(metric, u);
  const std::uint64_t startSeed = subseed(seed, kTagStart);
  const std::uint64_t gammaSeed = subseed(seed, kTagGamma);

  const std::vector<int> degrees(sys.degrees().begin(), sys.degrees().end());
  const StartSystem start = total_degree_start(degrees, startSeed);
  SplitMix64 grng(gammaSeed);
  const Cplx gamma = grng.unitComplex();

  const Homotopy h(start.system, sys.polynomials(), gamma);
  const std::vector<PathResult> results = track(h, start.points, cfg, threads);

  SolutionSet set = classify(results, cfg);
  set.seeds["master"] = seed;
  set.seeds["start"] = startSeed;
  set.seeds["gamma"] = gammaSeed;
  return set;
}

SolutionSet parameter_homotopy(const LagrangeSystem& baseSystem, const SolutionSet& baseSolutions,
                               const MetricSpec& newMetric, const TargetPoint& newTarget,
                               const TrackerConfig& cfg, std::uint64_t seed, int threads) {
  for (const VecXc& s : baseSolutions.solutions) {
    const double scale = std::pow(1.0 + s.lpNorm<Eigen::Infinity>(), 3);
    if (baseSystem.eval(s).lpNorm<Eigen::Infinity>() >= cfg.newtonTol * 10 * scale)
      throw std::invalid_argument("parameter_homotopy: base solutions do not satisfy the base system");
  }

  const LagrangeSystem targetSys(newMetric, newTarget);
  const std::uint64_t arcSeed = subseed(seed, kTagArc);
  SplitMix64 rng(arcSeed);
  const Cplx arc = 0.5 * rng.unitComplex();

  const ParameterPath h(baseSystem, targetSys, arc);
  const std::vector<PathResult> results = track(h, baseSolutions.solutions, cfg, threads);
  SolutionSet set = classify(results, cfg);
  set.seeds = baseSolutions.seeds;
  set.seeds["arc"] = arcSeed;
  return set;
}

}  // namespace vedkit
