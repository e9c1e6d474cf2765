#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vedkit/grassmann.hpp"
#include "vedkit/rational.hpp"

namespace vedkit {

/// Route disagreement or an integrality failure in the localization sums.
struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The vector deg(c_j^Ma(M) . H^j), j = 0..m, together with the virtual ED
/// degree vED = sum_j (-1)^{m+j} (2^{j+1} - 1) degs[j].
struct ChernMatherDegrees {
  int n = 0;
  std::vector<mpz_class> degs;
  mpz_class ved;
  WeightVector weightsUsed;
  char route = 'A';
  int sigma = -1;
};

/// deg(c_j^Ma . H^j) by localization on Gr_2: the Segre-class pushforward of
/// the resolution's xi-layers. Exact rational output; integer-valued.
Rat cm_degree_routeA(const ProblemSize& size, int j, const WeightVector& w, int sigma);

/// The same quantity by localization over the 3*C(n,2) fixed points of the
/// resolution itself. Must agree with route A exactly.
Rat cm_degree_routeB(const ProblemSize& size, int j, const WeightVector& w, int sigma);

struct VedOptions {
  bool verifyRoutes = false;  // recompute via route B and compare
  int threads = 1;
  int sigma = 0;  // 0 = use the anchor-validated global convention
};

/// Full degree vector and vED for sigma_2(v_2(C^n)).
ChernMatherDegrees ved(int n, const WeightVector& w, const VedOptions& opts = {});
ChernMatherDegrees ved(int n, const VedOptions& opts = {});

/// Recomputes ved(n) under `trials` random distinct-integer weight vectors
/// and reports whether every full degree vector is identical.
bool weight_independence_check(int n, int trials, std::uint64_t seed, int threads = 1);

/// The sign convention validated against the anchors ved(3) = 13 and
/// degs[m] = 3 at first use; cached. Throws VerificationError if neither
/// sign reproduces them.
int sign_convention();

/// Fixed xi-restriction convention (xi|_p = -selected root), recorded in run
/// metadata alongside sigma.
constexpr int kXiSign = -1;

}  // namespace vedkit
