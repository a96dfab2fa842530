#include "ncpoisson/ideals.hpp"

#include <Eigen/Eigenvalues>

#include "ncpoisson/algebra.hpp"
#include "ncpoisson/connection.hpp"
#include "ncpoisson/sampling.hpp"

namespace ncpoisson {

namespace {

double point_scale(const Point& x, int degree) {
  double r = 1.0;
  for (const auto& c : x) r = std::max(r, std::abs(c));
  return std::pow(r, std::max(degree, 0));
}

void require_point_dim(const Point& x, const Model& model) {
  if (static_cast<int>(x.size()) != model.vars) {
    throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(x.size()) + " coordinates, base has " +
                                                  std::to_string(model.vars));
  }
}

PolyMat sample_section(const Model& model) {
  const Poly one = Poly::constant(1.0, model.vars, model.cap);
  return model.n >= 2 ? PolyMat::unit_section(model, 0, 1, one) : PolyMat::identity(model);
}

}  // namespace

Ideal Ideal::points(std::vector<Point> s) {
  if (s.empty()) throw Error(ErrorCode::InvalidArgument, "point ideal needs at least one point");
  for (const auto& p : s) {
    if (p.size() != s.front().size() || p.empty() || p.size() > kMaxVars) {
      throw Error(ErrorCode::DimensionMismatch, "points must share 1 or 2 coordinates");
    }
    for (const auto& c : p) {
      if (!is_finite(c)) throw Error(ErrorCode::NonFinite, "point coordinate");
    }
  }
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (s[a] == s[b]) throw Error(ErrorCode::InvalidArgument, "points must be distinct");
    }
  }
  return Ideal(Points{std::move(s)});
}

Ideal Ideal::slice(int var_index, Scalar value) {
  if (var_index < 0 || var_index >= kMaxVars) throw Error(ErrorCode::IndexOutOfRange, "slice variable");
  if (!is_finite(value)) throw Error(ErrorCode::NonFinite, "slice value");
  return Ideal(Slice{var_index, value});
}

bool contains(const Ideal& ideal, const PolyMat& section, double tol) {
  if (const auto* pts = std::get_if<Ideal::Points>(&ideal.data())) {
    for (const auto& x : pts->points) {
      require_point_dim(x, section.model());
      const double value = max_abs(section.evaluate(x));
      if (!within_tol(value, section.max_abs() * point_scale(x, section.degree()), tol)) return false;
    }
    return true;
  }
  if (const auto* sl = std::get_if<Ideal::Slice>(&ideal.data())) {
    const PolyMat restricted = restrict_to_slice(section, sl->var_index, sl->value);
    return within_tol(restricted.max_abs(), section.max_abs() * point_scale({sl->value}, section.degree()), tol);
  }
  return true;
}

ZeroSet zero_set(const Ideal& ideal) {
  ZeroSet z;
  if (const auto* pts = std::get_if<Ideal::Points>(&ideal.data())) z.points = pts->points;
  if (const auto* sl = std::get_if<Ideal::Slice>(&ideal.data())) z.slice = *sl;
  return z;
}

Poly vanishing_polynomial(const Ideal& ideal, const Model& model, const Point& at) {
  if (model.vars < 1) throw Error(ErrorCode::DimensionMismatch, "ideals live on the bundle model");
  if (const auto* pts = std::get_if<Ideal::Points>(&ideal.data())) {
    require_point_dim(at, model);
    if (std::find(pts->points.begin(), pts->points.end(), at) == pts->points.end()) {
      throw Error(ErrorCode::InvalidArgument, "anchor point is not in the zero set");
    }
    const auto linear = [&model](int var, Scalar c) {
      return Poly::variable(var, model.vars, model.cap) - Poly::constant(c, model.vars, model.cap);
    };
    Poly f = linear(0, at[0]);
    for (const auto& p : pts->points) {
      if (p == at) continue;
      int var = 0;
      for (int v = 1; v < model.vars; ++v) {
        if (std::abs(p[v] - at[v]) > std::abs(p[var] - at[var])) var = v;
      }
      f = f * linear(var, p[var]);
    }
    return f;
  }
  if (const auto* sl = std::get_if<Ideal::Slice>(&ideal.data())) {
    if (model.vars != 2) throw Error(ErrorCode::DimensionMismatch, "slice ideals need a two-variable base");
    return Poly::variable(sl->var_index, model.vars, model.cap) - Poly::constant(sl->value, model.vars, model.cap);
  }
  return Poly::constant(1.0, model.vars, model.cap);
}

double zero_set_consistency(const Ideal& ideal, const Model& model) {
  if (const auto* pts = std::get_if<Ideal::Points>(&ideal.data())) {
    const Poly f = vanishing_polynomial(ideal, model, pts->points.front());
    double mismatch = 0.0;
    for (const auto& p : pts->points) mismatch = std::max(mismatch, std::abs(f.evaluate(p)));
    if (model.vars == 1) {
      // Roots of the monic defining polynomial via its companion matrix.
      const int d = f.degree();
      MatC companion = MatC::Zero(d, d);
      for (int k = 1; k < d; ++k) companion(k, k - 1) = 1.0;
      const Scalar lead = f.coeff(Exponent{d, 0});
      for (int k = 0; k < d; ++k) companion(k, d - 1) = -f.coeff(Exponent{k, 0}) / lead;
      Eigen::ComplexEigenSolver<MatC> es(companion);
      for (Eigen::Index r = 0; r < es.eigenvalues().size(); ++r) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& p : pts->points) nearest = std::min(nearest, std::abs(es.eigenvalues()(r) - p[0]));
        mismatch = std::max(mismatch, nearest);
      }
    }
    return mismatch;
  }
  if (const auto* sl = std::get_if<Ideal::Slice>(&ideal.data())) {
    const Poly f = vanishing_polynomial(ideal, model, {});
    double mismatch = 0.0;
    for (int k = -2; k <= 2; ++k) {
      Point on(2, Scalar(0.5 * k, 0.25 * k));
      on[sl->var_index] = sl->value;
      mismatch = std::max(mismatch, std::abs(f.evaluate(on)));
      Point off = on;
      off[sl->var_index] += 1.0;
      // Off the slice f must not vanish: |f(off)| = 1.
      mismatch = std::max(mismatch, std::abs(std::abs(f.evaluate(off)) - 1.0));
    }
    return mismatch;
  }
  return contains(ideal, PolyMat::identity(model)) ? 0.0 : 1.0;
}

namespace {

double poisson_ideal_residual(const Bracket& b, const Ideal& ideal, const Model& model, int samples,
                              std::uint64_t seed) {
  if (ideal.is_unit()) return 0.0;
  const ZeroSet zs = zero_set(ideal);
  Point at = zs.points.empty() ? Point(model.vars, Scalar{}) : zs.points.front();
  if (zs.slice) at[zs.slice->var_index] = zs.slice->value;
  const Poly f = vanishing_polynomial(ideal, model, at);
  const int budget = model.cap - f.degree() - b.degree_growth();
  if (budget < 0) throw Error(ErrorCode::DegreeOverflow, "degree cap too small to sample ideal members");
  const int member_degree = budget / 2;
  const int other_degree = budget - member_degree;

  std::vector<Point> probe = zs.points;
  if (zs.slice) {
    for (int k = -1; k <= 1; ++k) {
      Point p(2, Scalar(0.3 * k, -0.7 * k));
      p[zs.slice->var_index] = zs.slice->value;
      probe.push_back(p);
    }
  }
  Rng rng(seed);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const PolyMat member = f * random_section(rng, model, member_degree);
    const PolyMat other = random_section(rng, model, other_degree);
    const PolyMat left = b.eval(member, other);
    const PolyMat right = b.eval(other, member);
    for (const auto& x : probe) {
      worst = std::max(worst, max_abs(member.evaluate(x)));
      worst = std::max(worst, max_abs(left.evaluate(x)));
      worst = std::max(worst, max_abs(right.evaluate(x)));
    }
  }
  return worst;
}

}  // namespace

bool is_poisson_ideal(const Bracket& b, const Ideal& ideal, const Model& model, int samples, std::uint64_t seed,
                      double tol) {
  return poisson_ideal_residual(b, ideal, model, samples, seed) <= tol;
}

double poisson_ideal_max_residual(const Bracket& b, const Ideal& ideal, const Model& model, int samples,
                                  std::uint64_t seed) {
  return poisson_ideal_residual(b, ideal, model, samples, seed);
}

LocallyProperWitness locally_proper_witness(const Ideal& ideal, const Connection& conn, double tol) {
  if (ideal.is_unit()) throw Error(ErrorCode::NoWitness, "every derivation preserves the unit ideal");
  const Model& model = conn.model();
  const ZeroSet zs = zero_set(ideal);
  Point at = zs.points.empty() ? Point(model.vars, Scalar{}) : zs.points.front();
  int direction = 0;
  if (zs.slice) {
    at[zs.slice->var_index] = zs.slice->value;
    direction = zs.slice->var_index;
  }
  const Poly f = vanishing_polynomial(ideal, model, at);
  const PolyMat member = f * sample_section(model);
  Derivation d = covariant(conn, VectorField::coordinate(direction, model.vars, model.cap));
  const double escape = max_abs(d.apply(member).evaluate(at));
  if (!(escape > tol)) throw Error(ErrorCode::NoWitness, "covariant derivative stays in the ideal");
  return LocallyProperWitness{std::move(d), member, at, escape};
}

PointQuotient quotient_at_point(Point x0) { return PointQuotient(std::move(x0)); }

Derivation lift_derivation(const Model& bundle, const Point& x0, const Derivation& d, double tol) {
  require_point_dim(x0, bundle);
  if (!d.model().is_matrix() || d.model().n != bundle.n) {
    throw Error(ErrorCode::DimensionMismatch, "lift expects a derivation of the fiber matrix algebra");
  }
  PolyMat m0(Model::matrix(bundle.n));
  try {
    m0 = solve_inner_generator(d, tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CenterNotKilled) throw Error(ErrorCode::NotInner, e.what());
    throw;
  }
  return Derivation::inner(PolyMat::from_matrix(m0.constant_matrix(), bundle.vars, bundle.cap));
}

double lift_square_defect(const Derivation& lifted, const Derivation& d, const Point& x0, const PolyMat& section) {
  const MatC top = lifted.apply(section).evaluate(x0);
  const MatC bottom = d.apply(PolyMat::from_matrix(section.evaluate(x0))).constant_matrix();
  return max_abs(top - bottom);
}

PolyMat restrict_to_slice(const PolyMat& section, int var_index, Scalar value) {
  if (section.num_vars() != 2) throw Error(ErrorCode::DimensionMismatch, "slices need a two-variable base");
  PolyMat out(Model{section.n(), 1, section.degree_cap()});
  for (int i = 0; i < section.n(); ++i) {
    for (int j = 0; j < section.n(); ++j) out.set(i, j, section(i, j).substitute(var_index, value));
  }
  return out;
}

}  // namespace ncpoisson
