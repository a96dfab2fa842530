#pragma once

// Reference computations that avoid the library's own code paths.

#include <Eigen/Dense>
#include <complex>
#include <map>
#include <vector>

#include "ncpoisson/ncpoisson.hpp"

namespace oracle {

using ncpoisson::MatC;
using ncpoisson::Scalar;

/// Rank by column-pivoted Householder QR; independent of the SVD route.
inline int rank(const MatC& a, double rel = 1e-9) {
  if (a.size() == 0) return 0;
  Eigen::ColPivHouseholderQR<MatC> qr(a);
  qr.setThreshold(rel);
  return static_cast<int>(qr.rank());
}

/// Matrix unit with 0-based indices, built by hand.
inline MatC unit(int n, int i, int j) {
  MatC m = MatC::Zero(n, n);
  m(i, j) = 1.0;
  return m;
}

/// The n^4 vector of ad(E_ab) acting on row-major coordinates.
inline Eigen::VectorXcd ad_vector(int n, const MatC& g) {
  Eigen::VectorXcd v(n * n * n * n);
  for (int q = 0; q < n * n; ++q) {
    const MatC x = unit(n, q / n, q % n);
    const MatC out = g * x - x * g;
    for (int p = 0; p < n * n; ++p) v(p * n * n + q) = out(p / n, p % n);
  }
  return v;
}

/// Dense univariate/bivariate polynomial on a fixed grid of exponents.
struct DensePoly {
  int cap = 0;
  std::map<std::pair<int, int>, Scalar> c;

  static DensePoly from(const ncpoisson::Poly& p) {
    DensePoly d;
    d.cap = p.degree_cap();
    for (const auto& [e, v] : p.terms()) d.c[{e[0], e[1]}] += v;
    return d;
  }
  Scalar at(Scalar x, Scalar y = 0.0) const {
    Scalar s = 0.0;
    for (const auto& [e, v] : c) s += v * std::pow(x, e.first) * std::pow(y, e.second);
    return s;
  }
  DensePoly d(int var) const {
    DensePoly out;
    out.cap = cap;
    for (const auto& [e, v] : c) {
      const int k = var == 0 ? e.first : e.second;
      if (k == 0) continue;
      const auto ne = var == 0 ? std::make_pair(e.first - 1, e.second) : std::make_pair(e.first, e.second - 1);
      out.c[ne] += v * static_cast<double>(k);
    }
    return out;
  }
};

/// Entrywise evaluation of a section, without PolyMat::evaluate.
inline MatC eval(const ncpoisson::PolyMat& a, const ncpoisson::Point& x) {
  MatC m(a.n(), a.n());
  const Scalar x0 = x.empty() ? Scalar(0.0) : x[0];
  const Scalar x1 = x.size() > 1 ? x[1] : Scalar(0.0);
  for (int i = 0; i < a.n(); ++i) {
    for (int j = 0; j < a.n(); ++j) m(i, j) = DensePoly::from(a(i, j)).at(x0, x1);
  }
  return m;
}

/// Entrywise partial derivative evaluated at x.
inline MatC eval_partial(const ncpoisson::PolyMat& a, int var, const ncpoisson::Point& x) {
  MatC m(a.n(), a.n());
  const Scalar x0 = x.empty() ? Scalar(0.0) : x[0];
  const Scalar x1 = x.size() > 1 ? x[1] : Scalar(0.0);
  for (int i = 0; i < a.n(); ++i) {
    for (int j = 0; j < a.n(); ++j) m(i, j) = DensePoly::from(a(i, j)).d(var).at(x0, x1);
  }
  return m;
}

/// Covariant derivative D_X(phi)(x) assembled pointwise: sum g_i d_i phi + [sum g_i A_i, phi].
inline MatC covariant_at(const std::vector<ncpoisson::PolyMat>& forms, const std::vector<ncpoisson::Poly>& field,
                         const ncpoisson::PolyMat& phi, const ncpoisson::Point& x) {
  const int n = phi.n();
  MatC out = MatC::Zero(n, n);
  MatC ax = MatC::Zero(n, n);
  const Scalar x0 = x.empty() ? Scalar(0.0) : x[0];
  const Scalar x1 = x.size() > 1 ? x[1] : Scalar(0.0);
  for (std::size_t v = 0; v < field.size(); ++v) {
    const Scalar g = DensePoly::from(field[v]).at(x0, x1);
    out += g * eval_partial(phi, static_cast<int>(v), x);
    ax += g * eval(forms[v], x);
  }
  const MatC p = eval(phi, x);
  return out + ax * p - p * ax;
}

inline double max_abs(const MatC& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace oracle
