#include "vedkit/grassmann.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "vedkit/rng.hpp"

namespace vedkit {

ProblemSize::ProblemSize(int n_in) : n(n_in) {
  if (n < 3) throw std::invalid_argument("n too small");
  m = 2 * n - 2;
  N = n * (n + 1) / 2 - 1;
  dimG = 2 * (n - 2);
  dimZ = m;
}

WeightVector WeightVector::standard(int n) {
  WeightVector w;
  w.weights.resize(static_cast<size_t>(n));
  for (int l = 1; l <= n; ++l) w.weights[static_cast<size_t>(l) - 1] = l;
  return w;
}

WeightVector WeightVector::randomDistinct(int n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const long span = 4L * n;
  WeightVector w;
  std::unordered_set<long> seen;
  while (static_cast<int>(w.weights.size()) < n) {
    const long t = static_cast<long>(rng.next() % static_cast<std::uint64_t>(2 * span + 1)) - span;
    if (seen.insert(t).second) w.weights.push_back(t);
  }
  return w;
}

void WeightVector::validate() const {
  if (weights.size() < 3) throw std::invalid_argument("n too small");
  std::vector<long> sorted = weights;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("weights must be pairwise distinct");
}

std::vector<GFixedPoint> fixed_points(int n) {
  if (n < 3) throw std::invalid_argument("n too small");
  std::vector<GFixedPoint> pts;
  pts.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pts.push_back({i, j});
  return pts;
}

FixedPointRoots roots_at(const GFixedPoint& p, const WeightVector& w, int sigma) {
  const int n = w.n();
  const long ti = w.weights[static_cast<size_t>(p.i) - 1];
  const long tj = w.weights[static_cast<size_t>(p.j) - 1];
  FixedPointRoots r;
  r.sigma = sigma;
  const long s = sigma;
  r.rootsUdual = {s * ti, s * tj};
  r.rootsSym2Udual = {s * 2 * ti, s * (ti + tj), s * 2 * tj};
  r.rootsQdual.reserve(static_cast<size_t>(n) - 2);
  r.rootsUQdual.reserve(2 * (static_cast<size_t>(n) - 2));
  for (int k = 1; k <= n; ++k) {
    if (k == p.i || k == p.j) continue;
    const long tk = w.weights[static_cast<size_t>(k) - 1];
    r.rootsQdual.push_back(s * tk);
    r.rootsUQdual.push_back(s * (ti + tk));
    r.rootsUQdual.push_back(s * (tj + tk));
  }
  return r;
}

Rat euler_G(const GFixedPoint& p, const WeightVector& w) {
  const long ti = w.weights[static_cast<size_t>(p.i) - 1];
  const long tj = w.weights[static_cast<size_t>(p.j) - 1];
  mpz_class prod(1);
  for (int k = 1; k <= w.n(); ++k) {
    if (k == p.i || k == p.j) continue;
    const long tk = w.weights[static_cast<size_t>(k) - 1];
    prod *= mpz_class(tk - ti) * mpz_class(tk - tj);
  }
  if (sgn(prod) == 0) throw std::logic_error("euler_G: zero Euler class (weights not distinct?)");
  return Rat(prod);
}

std::vector<ZFixedPoint> z_fixed_points(const WeightVector& w, int sigma) {
  std::vector<ZFixedPoint> pts;
  const auto base = fixed_points(w.n());
  pts.reserve(3 * base.size());
  for (const GFixedPoint& p : base) {
    const FixedPointRoots r = roots_at(p, w, sigma);
    for (int l = 0; l < 3; ++l)
      pts.push_back({p, l, -r.rootsSym2Udual[static_cast<size_t>(l)]});
  }
  return pts;
}

}  // namespace vedkit
