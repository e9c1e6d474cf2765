#pragma once

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vedkit/localization.hpp"
#include "vedkit/rational.hpp"

namespace vedkit {

/// Contiguous table n -> (vED, degree vector).
struct VedTable {
  std::map<int, ChernMatherDegrees> entries;
  int nMin = 0;
  int nMax = 0;
};

/// Hook for reusing previously computed rows (wired to the CLI result cache).
using VedRowSource = std::function<std::optional<ChernMatherDegrees>(int n)>;

VedTable ved_table(int nMin, int nMax, int threads = 1, const VedRowSource& cached = nullptr,
                   const std::function<void(const ChernMatherDegrees&)>& onComputed = nullptr);

struct FitReport {
  std::optional<int> detectedDegree;  // nullopt = "not stabilized"
  std::vector<Rat> coefficients;      // ascending degree; empty if not stabilized
  std::pair<int, int> fitWindow{0, 0};
  struct Holdout {
    int n;
    mpz_class predicted;
    mpz_class actual;
    bool match;
  };
  std::vector<Holdout> holdout;
  bool stable = false;
};

/// Detects the polynomial degree of the window values by exact forward
/// differences, interpolates, and predicts the holdout rows above the window.
/// stable = true iff a degree was detected and every prediction is exact.
FitReport fit_and_validate(const VedTable& table, std::pair<int, int> window, int holdoutCount);

/// Same fit on an arbitrary integer sequence keyed by n (used by tests).
FitReport fit_sequence(const std::map<int, mpz_class>& values, std::pair<int, int> window,
                       int holdoutCount);

}  // namespace vedkit
