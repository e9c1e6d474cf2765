#include <doctest.h>

#include <cmath>
#include <complex>

#include "vedkit/detforms.hpp"
#include "vedkit/rng.hpp"
#include "vedkit/solutions.hpp"
#include "vedkit/tracker.hpp"

using namespace vedkit;

TEST_CASE("TrackerConfig validation") {
  TrackerConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.minStep = 1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.endgameStart = 1.5;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("total_degree_start shapes") {
  CHECK(total_degree_start(std::vector<int>{1, 1}, 7).points.size() == 1);
  const StartSystem quad = total_degree_start(std::vector<int>{2}, 7);
  REQUIRE(quad.points.size() == 2);
  // the two points are the square roots of r_1
  const Cplx p0 = quad.points[0](0), p1 = quad.points[1](0);
  CHECK(std::abs(p0 + p1) < 1e-14);
  CHECK(std::abs(quad.system.eval(quad.points[0])(0)) < 1e-14);
  CHECK(std::abs(quad.system.eval(quad.points[1])(0)) < 1e-14);

  const std::vector<int> seven(7, 3);
  CHECK(total_degree_start(seven, 1).points.size() == 2187);
  CHECK_THROWS_AS(total_degree_start(std::vector<int>{0}, 1), std::invalid_argument);
}

TEST_CASE("identity homotopy returns every start point") {
  const StartSystem s = total_degree_start(std::vector<int>{3, 2}, 5);
  const Homotopy h(s.system, s.system, Cplx(1, 0));
  const TrackerConfig cfg;
  const auto results = track(h, s.points, cfg);
  REQUIRE(results.size() == s.points.size());  // path conservation
  for (size_t i = 0; i < results.size(); ++i) {
    CHECK(results[i].status == PathStatus::Converged);
    CHECK((results[i].endpoint - s.points[i]).lpNorm<Eigen::Infinity>() < 1e-8);
  }
}

TEST_CASE("univariate x^2 - 1 from a degree-2 start") {
  PolySystem::Term sq{Cplx(1, 0), {2}}, one{Cplx(-1, 0), {0}};
  const PolySystem target(1, {{sq, one}});
  const StartSystem s = total_degree_start(std::vector<int>{2}, 99);
  SplitMix64 rng(3);
  const Homotopy h(s.system, target, rng.unitComplex());
  const TrackerConfig cfg;
  const auto results = track(h, s.points, cfg);
  REQUIRE(results.size() == 2);
  std::vector<double> roots;
  for (const auto& r : results) {
    REQUIRE(r.status == PathStatus::Converged);
    CHECK(std::abs(r.endpoint(0).imag()) < 1e-8);
    roots.push_back(r.endpoint(0).real());
  }
  std::sort(roots.begin(), roots.end());
  CHECK(roots[0] == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK(roots[1] == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("gamma must be unit modulus, shapes must match") {
  const StartSystem a = total_degree_start(std::vector<int>{2}, 1);
  const StartSystem b = total_degree_start(std::vector<int>{2, 2}, 1);
  CHECK_THROWS_AS(Homotopy(a.system, b.system, Cplx(1, 0)), std::invalid_argument);
  CHECK_THROWS_AS(Homotopy(a.system, a.system, Cplx(2, 0)), std::invalid_argument);
}

TEST_CASE("classify dedupes within tolerance and keeps sorted representatives") {
  TrackerConfig cfg;
  std::vector<PathResult> results(3);
  for (auto& r : results) {
    r.status = PathStatus::Converged;
    r.residual = 1e-13;
    r.conditionEstimate = 1.0;
    r.endpoint = VecXc::Zero(2);
  }
  results[0].endpoint << Cplx(1.0, 0), Cplx(0, 0);
  results[1].endpoint << Cplx(1.0 + 1e-9, 0), Cplx(0, 0);  // duplicate of [0]
  results[2].endpoint << Cplx(-2.0, 0), Cplx(0, 0);
  const SolutionSet set = classify(results, cfg);
  CHECK(set.count == 2);
  CHECK(set.pathsTracked == 3);
  CHECK(set.solutions[0](0).real() == -2.0);            // sorted
  CHECK(set.solutions[1](0).real() == 1.0);             // cluster's first element in sorted order
  CHECK(set.tally.converged == 3);
}

TEST_CASE("classify drops non-converged and singular endpoints") {
  TrackerConfig cfg;
  std::vector<PathResult> results(3);
  results[0].status = PathStatus::Diverged;
  results[0].endpoint = VecXc::Constant(1, Cplx(1e9, 0));
  results[1].status = PathStatus::SingularEndpoint;
  results[1].endpoint = VecXc::Zero(1);
  results[1].conditionEstimate = 1e15;
  results[2].status = PathStatus::StepFailure;
  results[2].endpoint = VecXc::Zero(1);
  const SolutionSet set = classify(results, cfg);
  CHECK(set.count == 0);
  CHECK(set.tally.diverged == 1);
  CHECK(set.tally.singular == 1);
  CHECK(set.tally.stepFailure == 1);
}

TEST_CASE("generic metric ED run finds exactly 13 solutions" * doctest::timeout(300)) {
  const TrackerConfig cfg;
  const MetricSpec metric = random_metric(100);
  const TargetPoint u = random_target(200);
  const LagrangeSystem sys(metric, u);
  const SolutionSet set = ed_count(metric, u, cfg, 300);
  CHECK(set.pathsTracked == 2187);
  CHECK(set.count == 13);
  CHECK(set.maxResidual < 10 * cfg.newtonTol);
  // every solution satisfies the defining equations componentwise
  for (const VecXc& z : set.solutions) {
    CHECK(sys.eval(z).lpNorm<Eigen::Infinity>() < 10 * cfg.newtonTol);  // raw, unscaled
    const Vec6c x = z.head<6>();
    const Cplx lam = z(6);
    CHECK(std::abs(sym3_det<Cplx>(x)) < 1e-8);
    const Vec6c metricEq = metric.gram.cast<Cplx>() * (x - u.u) - lam * sym3_det_grad<Cplx>(x);
    for (int r = 0; r < 6; ++r) CHECK(std::abs(metricEq(r)) < 1e-8);
  }
  // representatives are pairwise separated
  for (size_t a = 0; a < set.solutions.size(); ++a)
    for (size_t b = a + 1; b < set.solutions.size(); ++b)
      CHECK((set.solutions[a] - set.solutions[b]).lpNorm<Eigen::Infinity>() > cfg.dedupeTol);
}

TEST_CASE("Bombieri-Weyl metric ED run finds exactly 3 solutions" * doctest::timeout(300)) {
  const TrackerConfig cfg;
  const SolutionSet set = ed_count(bw_metric(), random_target(200), cfg, 301);
  CHECK(set.pathsTracked == 2187);
  CHECK(set.count == 3);
}

TEST_CASE("thread count does not change the solution set" * doctest::timeout(300)) {
  const TrackerConfig cfg;
  const SolutionSet a = ed_count(random_metric(100), random_target(200), cfg, 300, 1);
  const SolutionSet b = ed_count(random_metric(100), random_target(200), cfg, 300, 8);
  REQUIRE(a.count == b.count);
  for (int k = 0; k < a.count; ++k)
    CHECK((a.solutions[static_cast<size_t>(k)] - b.solutions[static_cast<size_t>(k)]).norm() == 0.0);
}

TEST_CASE("parameter homotopy: trivial segment, fresh instance, BW target" * doctest::timeout(600)) {
  const TrackerConfig cfg;
  const MetricSpec base = random_metric(100);
  const TargetPoint baseU = random_target(200);
  const LagrangeSystem baseSys(base, baseU);
  const SolutionSet baseSet = ed_count(base, baseU, cfg, 300);
  REQUIRE(baseSet.count == 13);

  SUBCASE("trivial segment returns the same set") {
    const SolutionSet moved = parameter_homotopy(baseSys, baseSet, base, baseU, cfg, 7);
    REQUIRE(moved.count == baseSet.count);
    for (int k = 0; k < moved.count; ++k)
      CHECK((moved.solutions[static_cast<size_t>(k)] - baseSet.solutions[static_cast<size_t>(k)])
                .lpNorm<Eigen::Infinity>() < cfg.dedupeTol);
  }

  SUBCASE("a second generic instance again has 13 critical points") {
    const SolutionSet moved =
        parameter_homotopy(baseSys, baseSet, random_metric(555), random_target(666), cfg, 8);
    CHECK(moved.count == 13);
    // cross-check: the full start-system run agrees
    const SolutionSet direct = ed_count(random_metric(555), random_target(666), cfg, 42);
    CHECK(direct.count == 13);
  }

  SUBCASE("moving to the BW instance stays within the virtual bound") {
    const SolutionSet moved = parameter_homotopy(baseSys, baseSet, bw_metric(), random_target(666), cfg, 9);
    CHECK(moved.count <= 13);
  }
}

TEST_CASE("parameter homotopy rejects stale base solutions") {
  const TrackerConfig cfg;
  const MetricSpec base = random_metric(100);
  const TargetPoint baseU = random_target(200);
  const LagrangeSystem baseSys(base, baseU);
  SolutionSet bogus;
  bogus.solutions.push_back(VecXc::Constant(7, Cplx(1.0, 1.0)));
  bogus.count = 1;
  CHECK_THROWS_AS(parameter_homotopy(baseSys, bogus, bw_metric(), baseU, cfg, 1), std::invalid_argument);
}
