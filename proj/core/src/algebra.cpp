#include "ncpoisson/algebra.hpp"

#include <string>

namespace ncpoisson {

PolyMat commutator(const PolyMat& a, const PolyMat& b) { return a * b - b * a; }

MatC commutator(const MatC& a, const MatC& b) { return a * b - b * a; }

MatC elementary(int n, int i, int j) {
  if (n < 1 || i < 1 || j < 1 || i > n || j > n) {
    throw Error(ErrorCode::IndexOutOfRange, "E_" + std::to_string(i) + std::to_string(j) +
                                                " outside 1.." + std::to_string(n));
  }
  MatC e = MatC::Zero(n, n);
  e(i - 1, j - 1) = 1.0;
  return e;
}

std::vector<MatC> projector_basis(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  std::vector<MatC> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      out.push_back(i == j ? elementary(n, i, i) : MatC(elementary(n, i, j) + elementary(n, j, j)));
    }
  }
  return out;
}

MatC CommWitness::multiply_out() const {
  if (factors.empty()) throw Error(ErrorCode::InvalidArgument, "empty witness");
  MatC product = commutator(factors.front().first, factors.front().second);
  for (std::size_t k = 1; k < factors.size(); ++k) {
    product = product * commutator(factors[k].first, factors[k].second);
  }
  return product;
}

CommWitness express_in_commutators(int n, int i, int j) {
  if (n == 1) throw Error(ErrorCode::Unsupported, "M_1 is commutative; no commutator witness");
  elementary(n, i, j);  // range check
  CommWitness w;
  if (i != j) {
    w.factors.emplace_back(elementary(n, i, j), elementary(n, j, j));
    return w;
  }
  const int k = (i % n) + 1;
  w.factors.emplace_back(elementary(n, i, k), elementary(n, k, k));
  w.factors.emplace_back(elementary(n, k, i), elementary(n, i, i));
  return w;
}

PolyMat traceless_part(const PolyMat& a) {
  const Poly shift = a.trace() * Scalar(1.0 / a.n());
  return a - PolyMat::scalar_section(shift, a.n());
}

MatC traceless_part(const MatC& a) {
  const Scalar shift = a.trace() / static_cast<double>(a.rows());
  return a - shift * MatC::Identity(a.rows(), a.cols());
}

MatC eval_section(const PolyMat& section, std::span<const Scalar> x) { return section.evaluate(x); }

Eigen::VectorXcd vec(const MatC& a) {
  const auto n = a.rows();
  Eigen::VectorXcd v(n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) v(i * n + j) = a(i, j);
  }
  return v;
}

MatC unvec(const Eigen::VectorXcd& v, int n) {
  if (v.size() != static_cast<Eigen::Index>(n) * n) throw Error(ErrorCode::DimensionMismatch, "unvec size");
  MatC a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = v(i * n + j);
  }
  return a;
}

}  // namespace ncpoisson
