#pragma once

#include <string>

#include "ncpoisson/derivation.hpp"

namespace ncpoisson {

/// D_X(Phi) = X(Phi) + [A(X), Phi]
Derivation covariant(const Connection& conn, const VectorField& x);

/// The base vector field a derivation induces on the center.
/// Throws NotWellDefined if D does not map central elements to central elements.
VectorField rho(const Derivation& d, double tol = kDefaultTol);

struct CurvatureDefect {
  /// F(X,Y) = X(A(Y)) - Y(A(X)) + [A(X), A(Y)] - A([X,Y])
  PolyMat curvature;
  /// max over E_ij of |([D_X, D_Y] - D_[X,Y])(E_ij) - [F, E_ij]|
  double max_residual = 0.0;
};

CurvatureDefect curvature_defect(const Connection& conn, const VectorField& x, const VectorField& y);

struct Decomposition {
  VectorField field;
  /// Traceless inner part relative to the flat reference connection.
  PolyMat inner;
  /// max over basis sections of |U - (ad(inner) + D^0_field)|
  double residual = 0.0;
};

/// U = ad(Phi) + D_X with respect to A = 0. Throws NotWellDefined or NotInner.
Decomposition decompose_derivation(const Derivation& u, double tol = kDefaultTol);

struct QmaReport {
  bool q1 = false;
  bool q2 = false;
  bool q3 = false;
  int commutant_dim = 0;
  int center_dim = 0;
  std::string details;

  bool all() const { return q1 && q2 && q3; }
};

/// Checks that the center is a quotient-manifold subalgebra of the capped bundle model.
QmaReport verify_quotient_manifold_conditions(int n, int m, int degree_cap, double tol = kDefaultTol);

}  // namespace ncpoisson
