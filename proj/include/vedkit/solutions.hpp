#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vedkit/lagrange.hpp"
#include "vedkit/tracker.hpp"

namespace vedkit {

/// Classified, deduplicated endpoints of a tracked batch.
struct SolutionSet {
  std::vector<VecXc> solutions;  // representatives, lexicographically sorted
  int count = 0;
  int pathsTracked = 0;
  double maxResidual = 0.0;  // over the kept endpoints
  std::map<std::string, std::uint64_t> seeds;

  struct StatusTally {
    int converged = 0, diverged = 0, singular = 0, stepFailure = 0;
  } tally;
};

/// Keeps finite nonsingular converged endpoints, sorts them lexicographically
/// by (real, imaginary) coordinate pairs and merges greedily at dedupeTol;
/// the representative is the cluster's first element in sorted order.
SolutionSet classify(std::span<const PathResult> results, const TrackerConfig& cfg);

/// End-to-end count of ED-critical points: build the Lagrange system, track
/// all 3^7 total-degree paths, classify. All seeds are recorded.
SolutionSet ed_count(const MetricSpec& metric, const TargetPoint& u, const TrackerConfig& cfg,
                     std::uint64_t seed, int threads = 1);

/// Moves known solutions of a base instance to a new (metric, target)
/// instance along a complex arc in coefficient space.
SolutionSet parameter_homotopy(const LagrangeSystem& baseSystem, const SolutionSet& baseSolutions,
                               const MetricSpec& newMetric, const TargetPoint& newTarget,
                               const TrackerConfig& cfg, std::uint64_t seed, int threads = 1);

}  // namespace vedkit
