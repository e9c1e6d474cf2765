#include "vedkit/lagrange.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

#include "vedkit/detforms.hpp"
#include "vedkit/rng.hpp"

namespace vedkit {
namespace {

PolySystem::Term term(Cplx c, std::initializer_list<int> vars) {
  PolySystem::Term t;
  t.coeff = c;
  t.exps.assign(7, 0);
  for (int v : vars) ++t.exps[static_cast<size_t>(v)];
  return t;
}

// det X = x0 x3 x5 - x0 x4^2 - x1^2 x5 + 2 x1 x2 x4 - x2^2 x3
PolySystem::Poly det_poly() {
  return {term({1, 0}, {0, 3, 5}), term({-1, 0}, {0, 4, 4}), term({-1, 0}, {1, 1, 5}),
          term({2, 0}, {1, 2, 4}), term({-1, 0}, {2, 2, 3})};
}

// lambda * (grad det)_r, negated: the -lambda grad det part of each metric row
PolySystem::Poly neg_lambda_grad(int r) {
  constexpr int L = 6;
  switch (r) {
    case 0: return {term({-1, 0}, {L, 3, 5}), term({1, 0}, {L, 4, 4})};
    case 1: return {term({2, 0}, {L, 1, 5}), term({-2, 0}, {L, 2, 4})};
    case 2: return {term({-2, 0}, {L, 1, 4}), term({2, 0}, {L, 2, 3})};
    case 3: return {term({-1, 0}, {L, 0, 5}), term({1, 0}, {L, 2, 2})};
    case 4: return {term({2, 0}, {L, 0, 4}), term({-2, 0}, {L, 1, 2})};
    case 5: return {term({-1, 0}, {L, 0, 3}), term({1, 0}, {L, 1, 1})};
    default: throw std::logic_error("bad gradient row");
  }
}

}  // namespace

TargetPoint random_target(std::uint64_t seed) {
  SplitMix64 rng(seed);
  TargetPoint t;
  for (int k = 0; k < 6; ++k) {
    const double re = rng.uniform(-1.0, 1.0);
    const double im = rng.uniform(-1.0, 1.0);
    t.u(k) = Cplx(re, im);
  }
  t.onVariety = std::abs(sym3_det<Cplx>(t.u)) < 1e-10;
  return t;
}

LagrangeSystem::LagrangeSystem(const MetricSpec& metric, const TargetPoint& target)
    : metric_(metric), target_(target) {
  if (!gram_invertible(metric_.gram)) throw std::invalid_argument("LagrangeSystem: degenerate metric");
  if (!target_.u.allFinite()) throw std::invalid_argument("LagrangeSystem: non-finite target");
  if (target_.onVariety)
    std::cerr << "warning: target point lies on the variety (det(U) ~ 0); critical equations may degenerate\n";

  std::vector<PolySystem::Poly> eqs;
  eqs.reserve(7);
  eqs.push_back(det_poly());

  const Vec6c qu = metric_.gram.cast<Cplx>() * target_.u;
  for (int r = 0; r < 6; ++r) {
    PolySystem::Poly p = neg_lambda_grad(r);
    for (int k = 0; k < 6; ++k) {
      const double q = metric_.gram(r, k);
      if (q != 0.0) p.push_back(term(Cplx(q, 0.0), {k}));
    }
    p.push_back(term(-qu(r), {}));
    eqs.push_back(std::move(p));
  }
  sys_ = PolySystem(kNumVars, std::move(eqs));
  degrees_.fill(3);
}

long LagrangeSystem::bezout() const {
  long b = 1;
  for (int d : degrees_) b *= d;
  return b;
}

}  // namespace vedkit
