#include "vedkit/tracker.hpp"

#include <Eigen/SVD>

#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "vedkit/rng.hpp"

namespace vedkit {

void TrackerConfig::validate() const {
  if (initialStep <= 0 || minStep <= 0 || newtonTol <= 0 || divergenceNorm <= 0 ||
      singularCondThreshold <= 0 || dedupeTol <= 0 || maxNewtonIters <= 0)
    throw std::invalid_argument("TrackerConfig: all parameters must be positive");
  if (minStep >= initialStep) throw std::invalid_argument("TrackerConfig: minStep must be < initialStep");
  if (endgameStart <= 0 || endgameStart >= 1)
    throw std::invalid_argument("TrackerConfig: endgameStart must lie in (0,1)");
}

const char* to_string(PathStatus s) {
  switch (s) {
    case PathStatus::Converged: return "converged";
    case PathStatus::Diverged: return "diverged";
    case PathStatus::SingularEndpoint: return "singularEndpoint";
    case PathStatus::StepFailure: return "stepFailure";
  }
  return "?";
}

Homotopy::Homotopy(const PolySystem& start, const PolySystem& target, Cplx gamma)
    : start_(&start), target_(&target), gamma_(gamma) {
  if (start.nvars() != target.nvars() || start.neqs() != target.neqs())
    throw std::invalid_argument("Homotopy: start and target must share shape");
  if (std::abs(std::abs(gamma) - 1.0) > 1e-12)
    throw std::invalid_argument("Homotopy: gamma must have unit modulus");
}

VecXc Homotopy::H(const VecXc& z, double t) const {
  return (1.0 - t) * start_->eval(z) + gamma_ * t * target_->eval(z);
}

MatXc Homotopy::Hx(const VecXc& z, double t) const {
  return (1.0 - t) * start_->jacobian(z) + gamma_ * t * target_->jacobian(z);
}

VecXc Homotopy::Ht(const VecXc& z, double /*t*/) const {
  return -start_->eval(z) + gamma_ * target_->eval(z);
}

int Homotopy::maxDegree() const {
  int d = 1;
  for (int x : start_->degrees()) d = std::max(d, x);
  for (int x : target_->degrees()) d = std::max(d, x);
  return d;
}

StartSystem total_degree_start(std::span<const int> degrees, std::uint64_t seed) {
  const int n = static_cast<int>(degrees.size());
  if (n == 0) throw std::invalid_argument("total_degree_start: empty degree list");
  long total = 1;
  for (int d : degrees) {
    if (d < 1) throw std::invalid_argument("total_degree_start: degrees must be >= 1");
    total *= d;
  }

  SplitMix64 rng(seed);
  std::vector<Cplx> r(static_cast<size_t>(n));
  for (auto& ri : r) ri = rng.unitComplex();

  std::vector<PolySystem::Poly> eqs;
  eqs.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    PolySystem::Term lead, tail;
    lead.coeff = Cplx(1.0, 0.0);
    lead.exps.assign(static_cast<size_t>(n), 0);
    lead.exps[static_cast<size_t>(i)] = static_cast<std::uint8_t>(degrees[static_cast<size_t>(i)]);
    tail.coeff = -r[static_cast<size_t>(i)];
    tail.exps.assign(static_cast<size_t>(n), 0);
    eqs.push_back({lead, tail});
  }

  // all combinations of d_i-th roots of r_i, mixed-radix enumeration
  std::vector<std::vector<Cplx>> roots(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int d = degrees[static_cast<size_t>(i)];
    const double mod = std::pow(std::abs(r[static_cast<size_t>(i)]), 1.0 / d);
    const double arg = std::arg(r[static_cast<size_t>(i)]) / d;
    for (int k = 0; k < d; ++k) {
      const double phi = arg + 2.0 * M_PI * k / d;
      roots[static_cast<size_t>(i)].push_back(mod * Cplx(std::cos(phi), std::sin(phi)));
    }
  }
  std::vector<VecXc> points;
  points.reserve(static_cast<size_t>(total));
  std::vector<int> digit(static_cast<size_t>(n), 0);
  for (long idx = 0; idx < total; ++idx) {
    VecXc p(n);
    for (int i = 0; i < n; ++i) p(i) = roots[static_cast<size_t>(i)][static_cast<size_t>(digit[static_cast<size_t>(i)])];
    points.push_back(std::move(p));
    for (int i = 0; i < n; ++i) {
      if (++digit[static_cast<size_t>(i)] < degrees[static_cast<size_t>(i)]) break;
      digit[static_cast<size_t>(i)] = 0;
    }
  }

  return {PolySystem(n, std::move(eqs)), std::move(points)};
}

namespace {

double inf_norm(const VecXc& v) { return v.lpNorm<Eigen::Infinity>(); }

// Residual acceptance scale at z: a degree-d system with O(1) coefficients
// grows like (1 + |z|)^d, so demanding an absolute tolerance far from the
// unit ball would be below machine precision.
double residual_scale(const VecXc& z, int degree) {
  return std::pow(1.0 + inf_norm(z), degree);
}

// Newton correction of z against H(., t); true iff the scaled residual drops
// below tol.
bool newton_correct(const HomotopyBase& h, VecXc& z, double t, double tol, int maxIters) {
  const int deg = h.maxDegree();
  for (int it = 0; it < maxIters; ++it) {
    const VecXc hv = h.H(z, t);
    if (inf_norm(hv) < tol * residual_scale(z, deg)) return true;
    const VecXc dz = h.Hx(z, t).partialPivLu().solve(hv);
    if (!dz.allFinite()) return false;
    z -= dz;
  }
  return inf_norm(h.H(z, t)) < tol * residual_scale(z, deg);
}

PathResult track_one(const HomotopyBase& h, const VecXc& start, const TrackerConfig& cfg) {
  constexpr double kTimeEps = 1e-14;
  constexpr int kMaxSteps = 100000;

  PathResult res;
  VecXc z = start;
  double t = 0.0;
  double dt = cfg.initialStep;
  int streak = 0;

  while (t < 1.0 - kTimeEps) {
    if (++res.stepsTaken > kMaxSteps) {
      res.status = PathStatus::StepFailure;
      res.endpoint = z;
      return res;
    }
    dt = std::min(dt, 1.0 - t);
    if (t > cfg.endgameStart) dt = std::min(dt, 0.5 * (1.0 - t) + 1e-8);

    // RK4 on the Davidenko flow Hx dz/dt = -Ht
    auto flow = [&](const VecXc& zz, double tt) -> VecXc {
      return h.Hx(zz, tt).partialPivLu().solve(-h.Ht(zz, tt));
    };
    const VecXc k1 = flow(z, t);
    const VecXc k2 = flow(z + 0.5 * dt * k1, t + 0.5 * dt);
    const VecXc k3 = flow(z + 0.5 * dt * k2, t + 0.5 * dt);
    const VecXc k4 = flow(z + dt * k3, t + dt);
    const VecXc predicted = z + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    VecXc zp = predicted;
    const double tp = t + dt;

    bool accepted = zp.allFinite() && newton_correct(h, zp, tp, cfg.newtonTol, cfg.maxNewtonIters);
    if (accepted) {
      // Guard against path jumping: the corrector must stay well inside the
      // predictor's own displacement, otherwise the step likely hopped onto a
      // neighboring path near a close encounter.
      const double predDist = inf_norm(predicted - z);
      const double corrDist = inf_norm(zp - predicted);
      accepted = corrDist <= 0.5 * predDist + 1e-12 * (1.0 + inf_norm(z));
    }
    if (accepted) {
      z = zp;
      t = tp;
      if (inf_norm(z) > cfg.divergenceNorm) {
        res.status = PathStatus::Diverged;
        res.endpoint = z;
        return res;
      }
      if (++streak >= 5 && dt < cfg.initialStep) {
        dt = std::min(cfg.initialStep, 2.0 * dt);
        streak = 0;
      }
    } else {
      streak = 0;
      dt *= 0.5;
      if (dt < cfg.minStep) {
        res.status = PathStatus::StepFailure;
        res.endpoint = z;
        return res;
      }
    }
  }

  // Final polish against the target system itself, iterated down to the
  // double-precision floor (the best iterate is kept, not the last).
  const int deg = h.maxDegree();
  double best = std::numeric_limits<double>::infinity();
  VecXc bestZ = z;
  for (int it = 0; it < 3 * cfg.maxNewtonIters; ++it) {
    if (!z.allFinite()) break;
    const VecXc fv = h.targetEval(z);
    const double r = inf_norm(fv);
    if (r < best) {
      best = r;
      bestZ = z;
    } else if (it > 0) {
      break;  // no further progress
    }
    if (r == 0.0) break;
    const VecXc dz = h.targetJacobian(z).partialPivLu().solve(fv);
    if (!dz.allFinite()) break;
    z -= dz;
  }
  z = bestZ;
  const bool polished = best < cfg.newtonTol * residual_scale(z, deg);
  res.endpoint = z;
  res.residual = std::isfinite(best) ? best / residual_scale(z, deg)
                                     : std::numeric_limits<double>::infinity();

  if (!z.allFinite() || inf_norm(z) > cfg.divergenceNorm) {
    res.status = PathStatus::Diverged;
    return res;
  }
  const Eigen::JacobiSVD<MatXc> svd(h.targetJacobian(z));
  const auto& sv = svd.singularValues();
  res.conditionEstimate = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1)
                                                : std::numeric_limits<double>::infinity();
  if (!polished) {
    res.status = res.conditionEstimate >= cfg.singularCondThreshold ? PathStatus::SingularEndpoint
                                                                    : PathStatus::StepFailure;
    return res;
  }
  if (res.conditionEstimate >= cfg.singularCondThreshold) {
    res.status = PathStatus::SingularEndpoint;
    return res;
  }
  res.status = PathStatus::Converged;
  return res;
}

std::vector<PathResult> track_pass(const HomotopyBase& h, std::span<const VecXc> starts,
                                   const TrackerConfig& cfg, int threads) {
  std::vector<PathResult> results(starts.size());
  const int nthreads = std::max(1, std::min<int>(threads, static_cast<int>(starts.size())));
  if (nthreads == 1) {
    for (size_t i = 0; i < starts.size(); ++i) results[i] = track_one(h, starts[i], cfg);
    return results;
  }
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= starts.size()) return;
      results[i] = track_one(h, starts[i], cfg);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(nthreads));
  for (int i = 0; i < nthreads; ++i) pool.emplace_back(work);
  for (auto& th : pool) th.join();  // barrier: callers see the full ordered list
  return results;
}

// Paths worth re-running with smaller steps: step failures whose endpoint
// stayed moderate (a diverging path would have blown up), and converged paths
// whose endpoint duplicates an earlier path's (each nonsingular solution
// belongs to exactly one path, so a duplicate means someone jumped).
// Step failures are only retried once: a second identical failure means the
// approach is genuinely hard, not a jump.
std::vector<size_t> suspicious_indices(const std::vector<PathResult>& results,
                                       const TrackerConfig& cfg, bool includeFailures) {
  std::vector<size_t> out;
  std::vector<const VecXc*> owners;
  for (size_t i = 0; i < results.size(); ++i) {
    const PathResult& r = results[i];
    if (r.status == PathStatus::StepFailure && includeFailures && r.endpoint.size() > 0 &&
        r.endpoint.allFinite() && inf_norm(r.endpoint) < 1e-3 * cfg.divergenceNorm) {
      out.push_back(i);
      continue;
    }
    if (r.status == PathStatus::Converged) {
      bool duplicate = false;
      for (const VecXc* o : owners)
        if (inf_norm(*o - r.endpoint) <= cfg.dedupeTol) {
          duplicate = true;
          break;
        }
      if (duplicate)
        out.push_back(i);
      else
        owners.push_back(&r.endpoint);
    }
  }
  return out;
}

}  // namespace

std::vector<PathResult> track(const HomotopyBase& h, std::span<const VecXc> starts,
                              const TrackerConfig& cfg, int threads) {
  cfg.validate();
  std::vector<PathResult> results = track_pass(h, starts, cfg, threads);

  // Deterministic refinement: re-track suspicious paths with smaller steps.
  TrackerConfig tight = cfg;
  for (int pass = 0; pass < 2; ++pass) {
    tight.initialStep = std::max(10.0 * cfg.minStep, tight.initialStep / 5.0);
    if (tight.initialStep <= 10.0 * cfg.minStep && pass > 0) break;
    const std::vector<size_t> idxs = suspicious_indices(results, cfg, pass == 0);
    if (idxs.empty()) break;
    std::vector<VecXc> retryStarts;
    retryStarts.reserve(idxs.size());
    for (size_t i : idxs) retryStarts.push_back(starts[i]);
    const std::vector<PathResult> redo = track_pass(h, retryStarts, tight, threads);
    for (size_t k = 0; k < idxs.size(); ++k)
      if (redo[k].status == PathStatus::Converged) results[idxs[k]] = redo[k];
  }
  return results;
}

}  // namespace vedkit
