#pragma once

#include <Eigen/Dense>

#include "ncpoisson/scalar.hpp"

namespace ncpoisson::linalg {

/// Singular values, descending.
Eigen::VectorXd singular_values(const Eigen::MatrixXcd& a);

/// Number of singular values above tol * sigma_max.
int rank(const Eigen::MatrixXcd& a, double tol = kDefaultTol);

/// Orthonormal basis (as columns) of the null space, using the threshold tol * sigma_max.
Eigen::MatrixXcd nullspace(const Eigen::MatrixXcd& a, double tol = kDefaultTol);

struct LeastSquares {
  Eigen::VectorXcd x;
  /// max |a x - b|
  double residual = 0.0;
};

/// Minimum-norm least-squares solution.
LeastSquares solve(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b, double tol = kDefaultTol);

}  // namespace ncpoisson::linalg
