#include "vedkit/symtensor.hpp"

#include <algorithm>
#include <stdexcept>

namespace vedkit {
namespace {

void enumerate(int dim, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == dim - 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = total; k >= 0; --k) {
    cur.push_back(k);
    enumerate(dim, total - k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SymTensor::SymTensor(int degree, int dimension) : degree_(degree), dimension_(dimension) {
  if (degree < 0 || dimension < 1) throw std::invalid_argument("SymTensor: bad shape");
  std::vector<int> cur;
  enumerate(dimension, degree, cur, exps_);
  coeffs_.assign(exps_.size(), 0.0);
}

int SymTensor::indexOf(std::span<const int> alpha) const {
  if (static_cast<int>(alpha.size()) != dimension_)
    throw std::invalid_argument("SymTensor: multi-index length mismatch");
  int total = 0;
  for (int a : alpha) total += a;
  if (total != degree_) throw std::invalid_argument("SymTensor: |alpha| != degree");
  for (size_t i = 0; i < exps_.size(); ++i)
    if (std::equal(alpha.begin(), alpha.end(), exps_[i].begin())) return static_cast<int>(i);
  throw std::logic_error("SymTensor: index not found");
}

double& SymTensor::at(std::span<const int> alpha) { return coeffs_[static_cast<size_t>(indexOf(alpha))]; }
double SymTensor::at(std::span<const int> alpha) const { return coeffs_[static_cast<size_t>(indexOf(alpha))]; }

double SymTensor::multinomial(int degree, std::span<const int> alpha) {
  double v = 1.0;
  int rem = degree;
  for (int a : alpha) {
    for (int k = 1; k <= a; ++k) {
      v *= static_cast<double>(rem--);
      v /= static_cast<double>(k);
    }
  }
  return v;
}

void SymTensor::addMonomial(std::span<const int> alpha, double c) {
  at(alpha) += c / multinomial(degree_, alpha);
}

SymTensor SymTensor::powerOfLinear(const Eigen::VectorXd& v, int degree) {
  SymTensor t(degree, static_cast<int>(v.size()));
  for (size_t i = 0; i < t.exps_.size(); ++i) {
    double c = 1.0;
    for (int k = 0; k < t.dimension_; ++k)
      for (int e = 0; e < t.exps_[i][static_cast<size_t>(k)]; ++e) c *= v(k);
    t.coeffs_[i] = c;
  }
  return t;
}

double bw_product(const SymTensor& f, const SymTensor& g) {
  if (f.degree() != g.degree() || f.dimension() != g.dimension())
    throw std::invalid_argument("bw_product: shape mismatch");
  double acc = 0.0;
  const auto& exps = f.exponents();
  for (size_t i = 0; i < exps.size(); ++i)
    acc += SymTensor::multinomial(f.degree(), exps[i]) * f.coefficients()[i] * g.coefficients()[i];
  return acc;
}

}  // namespace vedkit
