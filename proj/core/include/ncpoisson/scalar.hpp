#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include "ncpoisson/error.hpp"

namespace ncpoisson {

using Scalar = std::complex<double>;

/// Default tolerance for every equality and defect test.
inline constexpr double kDefaultTol = 1e-9;

/// Relative floor below which a computed coefficient is treated as exact cancellation.
inline constexpr double kPruneRel = 1e-13;

inline bool is_finite(Scalar z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline Scalar checked_scalar(double re, double im = 0.0) {
  Scalar z{re, im};
  if (!is_finite(z)) throw Error(ErrorCode::NonFinite, "scalar must be finite");
  return z;
}

/// residual <= tol * max(1, scale)
inline bool within_tol(double residual, double scale = 1.0, double tol = kDefaultTol) {
  return residual <= tol * std::max(1.0, scale);
}

}  // namespace ncpoisson
