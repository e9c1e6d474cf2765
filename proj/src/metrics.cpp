#include "vedkit/metrics.hpp"

#include <stdexcept>

#include "vedkit/rng.hpp"

namespace vedkit {

Gram bw_gram() {
  Gram g = Gram::Zero();
  g.diagonal() << 1, 2, 2, 1, 2, 1;
  return g;
}

bool gram_invertible(const Gram& g) {
  const Eigen::JacobiSVD<Gram> svd(g);
  const auto& sv = svd.singularValues();
  return sv(0) > 0.0 && sv(5) >= 1e-8 * sv(0);
}

std::string MetricSpec::name() const {
  switch (kind) {
    case Kind::GenericRandom: return "random(seed=" + std::to_string(seed) + ")";
    case Kind::BombieriWeyl: return "bw";
    case Kind::Diagonal: return "diagonal";
    case Kind::Explicit: return "explicit";
  }
  return "?";
}

MetricSpec bw_metric() {
  MetricSpec m;
  m.kind = MetricSpec::Kind::BombieriWeyl;
  m.gram = bw_gram();
  return m;
}

MetricSpec random_metric(std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 100; ++attempt) {
    Gram g;
    for (int i = 0; i < 6; ++i) {
      g(i, i) = rng.uniform(-1.0, 1.0);
      for (int j = i + 1; j < 6; ++j) g(i, j) = g(j, i) = rng.uniform(-1.0, 1.0);
    }
    if (gram_invertible(g)) {
      MetricSpec m;
      m.kind = MetricSpec::Kind::GenericRandom;
      m.seed = seed;
      m.gram = g;
      return m;
    }
  }
  throw std::runtime_error("random_metric: no invertible sample in 100 tries");
}

MetricSpec diag_family_metric(const std::array<double, 6>& a) {
  Gram g = Gram::Zero();
  for (int i = 0; i < 6; ++i) {
    if (!(a[static_cast<size_t>(i)] > 0.0))
      throw std::invalid_argument("diag_family_metric: entries must be positive");
    g(i, i) = a[static_cast<size_t>(i)];
  }
  if (!gram_invertible(g)) throw std::invalid_argument("diag_family_metric: degenerate gram");
  MetricSpec m;
  m.kind = MetricSpec::Kind::Diagonal;
  m.gram = g;
  return m;
}

MetricSpec explicit_metric(const Gram& g) {
  if (!g.isApprox(g.transpose(), 1e-12)) throw std::invalid_argument("explicit_metric: gram not symmetric");
  if (!gram_invertible(g)) throw std::invalid_argument("explicit_metric: degenerate gram");
  MetricSpec m;
  m.kind = MetricSpec::Kind::Explicit;
  m.gram = (g + g.transpose()) / 2.0;
  return m;
}

}  // namespace vedkit
