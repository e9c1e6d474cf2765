#pragma once

#include <Eigen/Dense>

#include <span>
#include <vector>

namespace vedkit {

/// Dense symmetric tensor of order `degree` on `dimension` variables, stored
/// through its normalized coefficients f_alpha in the expansion
/// f = sum_{|alpha| = degree} binom(degree, alpha) f_alpha x^alpha.
class SymTensor {
 public:
  SymTensor(int degree, int dimension);

  int degree() const { return degree_; }
  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(coeffs_.size()); }

  /// Normalized coefficient f_alpha; |alpha| must equal the degree.
  double& at(std::span<const int> alpha);
  double at(std::span<const int> alpha) const;

  /// Adds the polynomial monomial c * x^alpha (divides by the multinomial).
  void addMonomial(std::span<const int> alpha, double c);

  /// The power (v . x)^degree of a linear form, so f_alpha = v^alpha.
  static SymTensor powerOfLinear(const Eigen::VectorXd& v, int degree);

  const std::vector<std::vector<int>>& exponents() const { return exps_; }
  const std::vector<double>& coefficients() const { return coeffs_; }

  static double multinomial(int degree, std::span<const int> alpha);

 private:
  int indexOf(std::span<const int> alpha) const;

  int degree_;
  int dimension_;
  std::vector<std::vector<int>> exps_;  // all alpha with |alpha| = degree, lex order
  std::vector<double> coeffs_;
};

/// Bombieri-Weyl pairing sum_alpha binom(d, alpha) f_alpha g_alpha. The two
/// tensors must have the same degree and dimension.
double bw_product(const SymTensor& f, const SymTensor& g);

}  // namespace vedkit
