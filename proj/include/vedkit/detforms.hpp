#pragma once

#include <Eigen/Dense>

namespace vedkit {

// Closed forms for det, gradient and Hessian of the symmetric 3x3 matrix
//   X = [[x1, x2, x3],
//        [x2, x4, x5],
//        [x3, x5, x6]]
// in the coordinate order (x11, x12, x13, x22, x23, x33). Templated on the
// scalar so the same expressions serve real and complex evaluation.

template <typename Scalar>
Scalar sym3_det(const Eigen::Matrix<Scalar, 6, 1>& x) {
  return x(0) * x(3) * x(5) - x(0) * x(4) * x(4) - x(1) * x(1) * x(5) +
         Scalar(2) * x(1) * x(2) * x(4) - x(2) * x(2) * x(3);
}

template <typename Scalar>
Eigen::Matrix<Scalar, 6, 1> sym3_det_grad(const Eigen::Matrix<Scalar, 6, 1>& x) {
  Eigen::Matrix<Scalar, 6, 1> g;
  g(0) = x(3) * x(5) - x(4) * x(4);
  g(1) = Scalar(-2) * x(1) * x(5) + Scalar(2) * x(2) * x(4);
  g(2) = Scalar(2) * x(1) * x(4) - Scalar(2) * x(2) * x(3);
  g(3) = x(0) * x(5) - x(2) * x(2);
  g(4) = Scalar(-2) * x(0) * x(4) + Scalar(2) * x(1) * x(2);
  g(5) = x(0) * x(3) - x(1) * x(1);
  return g;
}

template <typename Scalar>
Eigen::Matrix<Scalar, 6, 6> sym3_det_hess(const Eigen::Matrix<Scalar, 6, 1>& x) {
  Eigen::Matrix<Scalar, 6, 6> h = Eigen::Matrix<Scalar, 6, 6>::Zero();
  auto set = [&h](int i, int j, Scalar v) { h(i, j) = v; h(j, i) = v; };
  set(0, 3, x(5));
  set(0, 4, Scalar(-2) * x(4));
  set(0, 5, x(3));
  h(1, 1) = Scalar(-2) * x(5);
  set(1, 2, Scalar(2) * x(4));
  set(1, 4, Scalar(2) * x(2));
  set(1, 5, Scalar(-2) * x(1));
  h(2, 2) = Scalar(-2) * x(3);
  set(2, 3, Scalar(-2) * x(2));
  set(2, 4, Scalar(2) * x(1));
  h(4, 4) = Scalar(-2) * x(0);
  set(3, 5, x(0));
  return h;
}

}  // namespace vedkit
