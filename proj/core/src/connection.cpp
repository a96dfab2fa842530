#include "ncpoisson/connection.hpp"

#include <sstream>

#include "ncpoisson/algebra.hpp"

namespace ncpoisson {

Derivation covariant(const Connection& conn, const VectorField& x) { return Derivation::covariant(conn, x); }

VectorField rho(const Derivation& d, double tol) {
  const Model& model = d.model();
  if (model.vars < 1) throw Error(ErrorCode::DimensionMismatch, "rho needs the bundle model");
  if (model.cap < 1) throw Error(ErrorCode::InvalidArgument, "rho needs degree cap >= 1");

  std::vector<Poly> coeffs;
  for (int v = 0; v < model.vars; ++v) {
    const PolyMat image = d.apply(PolyMat::scalar_section(Poly::variable(v, model.vars, model.cap), model.n));
    const double off_center = traceless_part(image).max_abs();
    if (!within_tol(off_center, image.max_abs(), tol)) {
      throw Error(ErrorCode::NotWellDefined, "image of t_" + std::to_string(v + 1) + " is not central");
    }
    coeffs.push_back(image.trace() * Scalar(1.0 / model.n));
  }
  VectorField x(std::move(coeffs));

  for (const auto& e : monomials_up_to(model.vars, std::min(model.cap, 2))) {
    const Poly p = Poly::monomial(e, 1.0, model.vars, model.cap);
    PolyMat lhs(model);
    PolyMat rhs(model);
    try {
      lhs = d.apply(PolyMat::scalar_section(p, model.n));
      rhs = PolyMat::scalar_section(x.apply(p), model.n);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::DegreeOverflow) continue;
      throw;
    }
    const double defect = distance(lhs, rhs);
    if (!within_tol(defect, lhs.max_abs(), tol)) {
      throw Error(ErrorCode::NotWellDefined, "derivation does not act on the center as a vector field");
    }
  }
  return x;
}

CurvatureDefect curvature_defect(const Connection& conn, const VectorField& x, const VectorField& y) {
  const Model& model = conn.model();
  const PolyMat ax = conn.contract(x);
  const PolyMat ay = conn.contract(y);
  const VectorField xy = lie_bracket(x, y);

  CurvatureDefect out{x.apply(ay) - y.apply(ax) + commutator(ax, ay) - conn.contract(xy), 0.0};

  const Derivation dx = covariant(conn, x);
  const Derivation dy = covariant(conn, y);
  const Derivation dxy = covariant(conn, xy);
  const Derivation bracket = der_bracket(dx, dy);
  const Poly one = Poly::constant(1.0, model.vars, model.cap);
  for (int i = 0; i < model.n; ++i) {
    for (int j = 0; j < model.n; ++j) {
      const PolyMat e = PolyMat::unit_section(model, i, j, one);
      const double defect = distance(bracket.apply(e), dxy.apply(e) + commutator(out.curvature, e));
      out.max_residual = std::max(out.max_residual, defect);
    }
  }
  return out;
}

Decomposition decompose_derivation(const Derivation& u, double tol) {
  const Model& model = u.model();
  VectorField x = rho(u, tol);
  const Derivation reference = covariant(Connection::flat(model), x);
  const Derivation residual_part = u - reference;
  PolyMat phi = solve_inner_generator(residual_part, tol);
  const double residual = basis_distance(u, Derivation::inner(phi) + reference);
  return Decomposition{std::move(x), std::move(phi), residual};
}

QmaReport verify_quotient_manifold_conditions(int n, int m, int degree_cap, double tol) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (m < 1 || m > kMaxVars) throw Error(ErrorCode::InvalidArgument, "m must be 1 or 2");
  if (degree_cap < 1) throw Error(ErrorCode::InvalidArgument, "degree cap must be >= 1");
  const Model model = Model::bundle(n, m, degree_cap);
  const auto center = center_basis(n, m, degree_cap);
  const Poly one = Poly::constant(1.0, m, degree_cap);

  QmaReport report;
  report.center_dim = static_cast<int>(center.size());
  std::ostringstream details;

  // q1: B sits in Z(A) and is commutative, so Z(B) = B = B n Z(A).
  double central_defect = 0.0;
  for (const auto& b : center) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        central_defect = std::max(central_defect, commutator(b, PolyMat::unit_section(model, i, j, one)).max_abs());
      }
    }
  }
  double commutative_defect = 0.0;
  for (std::size_t a = 0; a < center.size(); ++a) {
    for (std::size_t b = a + 1; b < center.size(); ++b) {
      if (center[a].degree() + center[b].degree() > degree_cap) continue;
      commutative_defect = std::max(commutative_defect, commutator(center[a], center[b]).max_abs());
    }
  }
  report.q1 = within_tol(central_defect, 1.0, tol) && within_tol(commutative_defect, 1.0, tol);
  details << "q1: central defect " << central_defect << ", commutativity defect " << commutative_defect << "; ";

  // q2: rho o covariant hits every p * d/dt_i.
  double q2_defect = 0.0;
  bool q2_ok = true;
  const Connection flat = Connection::flat(model);
  for (int v = 0; v < m && q2_ok; ++v) {
    for (const auto& e : monomials_up_to(m, degree_cap)) {
      const VectorField target = VectorField::coordinate(v, m, degree_cap).scaled(Poly::monomial(e, 1.0, m, degree_cap));
      try {
        q2_defect = std::max(q2_defect, distance(rho(covariant(flat, target), tol), target));
      } catch (const Error& err) {
        details << "q2 failure: " << err.what() << "; ";
        q2_ok = false;
        break;
      }
    }
  }
  report.q2 = q2_ok && within_tol(q2_defect, 1.0, tol);
  details << "q2: max field defect " << q2_defect << "; ";

  // q3: the common kernel of the inner derivations is exactly the span of B.
  const Commutant c = commutant_of_units(model, tol);
  report.commutant_dim = c.dim;
  report.q3 = c.dim == report.center_dim && within_tol(c.containment_residual, 1.0, tol);
  details << "q3: commutant dim " << c.dim << " vs center dim " << report.center_dim << ", containment residual "
          << c.containment_residual;
  report.details = details.str();
  return report;
}

}  // namespace ncpoisson
