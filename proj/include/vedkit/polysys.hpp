#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace vedkit {

using Cplx = std::complex<double>;
using VecXc = Eigen::VectorXcd;
using MatXc = Eigen::MatrixXcd;

/// Sparse multivariate polynomial system over the complex numbers: each
/// equation is a list of monomials. Derivative systems are precomputed once
/// so Jacobian evaluation is a plain monomial sweep.
class PolySystem {
 public:
  struct Term {
    Cplx coeff;
    std::vector<std::uint8_t> exps;  // one exponent per variable
  };
  using Poly = std::vector<Term>;

  PolySystem() = default;
  PolySystem(int nvars, std::vector<Poly> eqs);

  int nvars() const { return nvars_; }
  int neqs() const { return static_cast<int>(eqs_.size()); }
  const std::vector<Poly>& equations() const { return eqs_; }

  std::vector<int> degrees() const;  // max total degree per equation

  VecXc eval(const VecXc& z) const;
  MatXc jacobian(const VecXc& z) const;

 private:
  void buildDerivatives();
  static Cplx evalPoly(const Poly& p, const VecXc& z);

  int nvars_ = 0;
  std::vector<Poly> eqs_;
  std::vector<std::vector<Poly>> deriv_;  // [eq][var]
};

}  // namespace vedkit
