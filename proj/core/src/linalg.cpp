#include "ncpoisson/linalg.hpp"

#include <Eigen/SVD>

namespace ncpoisson::linalg {

Eigen::VectorXd singular_values(const Eigen::MatrixXcd& a) {
  if (a.size() == 0) return {};
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
  return svd.singularValues();
}

int rank(const Eigen::MatrixXcd& a, double tol) {
  const Eigen::VectorXd s = singular_values(a);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) > tol * s(0)) ++r;
  }
  return r;
}

Eigen::MatrixXcd nullspace(const Eigen::MatrixXcd& a, double tol) {
  const Eigen::Index cols = a.cols();
  if (a.rows() == 0 || cols == 0) return Eigen::MatrixXcd::Identity(cols, cols);
  // Pad short systems so V is square.
  Eigen::MatrixXcd work = a;
  if (a.rows() < cols) {
    work = Eigen::MatrixXcd::Zero(cols, cols);
    work.topRows(a.rows()) = a;
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(work, Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  if (s(0) == 0.0) return Eigen::MatrixXcd::Identity(cols, cols);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > tol * s(0)) ++r;
  return svd.matrixV().rightCols(cols - r);
}

LeastSquares solve(const Eigen::MatrixXcd& a, const Eigen::VectorXcd& b, double tol) {
  LeastSquares out;
  if (a.cols() == 0) {
    out.x = Eigen::VectorXcd::Zero(0);
    out.residual = b.size() == 0 ? 0.0 : b.cwiseAbs().maxCoeff();
    return out;
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& s = svd.singularValues();
  Eigen::VectorXcd coeffs = svd.matrixU().adjoint() * b;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    coeffs(k) = (s(0) > 0.0 && s(k) > tol * s(0)) ? coeffs(k) / s(k) : Scalar{};
  }
  out.x = svd.matrixV() * coeffs;
  const Eigen::VectorXcd r = a * out.x - b;
  out.residual = r.size() == 0 ? 0.0 : r.cwiseAbs().maxCoeff();
  return out;
}

}  // namespace ncpoisson::linalg
