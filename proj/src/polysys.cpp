#include "vedkit/polysys.hpp"

#include <stdexcept>

namespace vedkit {

PolySystem::PolySystem(int nvars, std::vector<Poly> eqs) : nvars_(nvars), eqs_(std::move(eqs)) {
  for (const Poly& p : eqs_)
    for (const Term& t : p)
      if (static_cast<int>(t.exps.size()) != nvars_)
        throw std::invalid_argument("PolySystem: exponent list length mismatch");
  buildDerivatives();
}

std::vector<int> PolySystem::degrees() const {
  std::vector<int> d;
  d.reserve(eqs_.size());
  for (const Poly& p : eqs_) {
    int deg = 0;
    for (const Term& t : p) {
      int total = 0;
      for (std::uint8_t e : t.exps) total += e;
      deg = std::max(deg, total);
    }
    d.push_back(deg);
  }
  return d;
}

void PolySystem::buildDerivatives() {
  deriv_.assign(eqs_.size(), std::vector<Poly>(static_cast<size_t>(nvars_)));
  for (size_t i = 0; i < eqs_.size(); ++i) {
    for (int v = 0; v < nvars_; ++v) {
      Poly dp;
      for (const Term& t : eqs_[i]) {
        const std::uint8_t e = t.exps[static_cast<size_t>(v)];
        if (e == 0) continue;
        Term dt = t;
        dt.coeff *= static_cast<double>(e);
        dt.exps[static_cast<size_t>(v)] = static_cast<std::uint8_t>(e - 1);
        dp.push_back(std::move(dt));
      }
      deriv_[i][static_cast<size_t>(v)] = std::move(dp);
    }
  }
}

Cplx PolySystem::evalPoly(const Poly& p, const VecXc& z) {
  Cplx acc(0.0, 0.0);
  for (const Term& t : p) {
    Cplx m = t.coeff;
    for (size_t v = 0; v < t.exps.size(); ++v)
      for (std::uint8_t e = 0; e < t.exps[v]; ++e) m *= z(static_cast<Eigen::Index>(v));
    acc += m;
  }
  return acc;
}

VecXc PolySystem::eval(const VecXc& z) const {
  VecXc out(neqs());
  for (int i = 0; i < neqs(); ++i) out(i) = evalPoly(eqs_[static_cast<size_t>(i)], z);
  return out;
}

MatXc PolySystem::jacobian(const VecXc& z) const {
  MatXc out(neqs(), nvars_);
  for (int i = 0; i < neqs(); ++i)
    for (int v = 0; v < nvars_; ++v)
      out(i, v) = evalPoly(deriv_[static_cast<size_t>(i)][static_cast<size_t>(v)], z);
  return out;
}

}  // namespace vedkit
