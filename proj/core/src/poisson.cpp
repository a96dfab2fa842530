#include "ncpoisson/poisson.hpp"

#include <limits>

#include "ncpoisson/algebra.hpp"
#include "ncpoisson/linalg.hpp"

namespace ncpoisson {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Poly one_of(const Model& m) { return Poly::constant(1.0, m.vars, m.cap); }

PolyMat unit(const Model& m, int i, int j) { return PolyMat::unit_section(m, i, j, one_of(m)); }

std::vector<PolyMat> units(const Model& m) {
  std::vector<PolyMat> out;
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) out.push_back(unit(m, i, j));
  }
  return out;
}

/// Runs f, mapping DegreeOverflow to +inf.
template <typename F>
double defect_or_inf(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegreeOverflow) return kInf;
    throw;
  }
}

Poly lift_lambda(const Poly& lambda, const Model& m) {
  if (lambda.num_vars() == m.vars && (m.vars == 0 || lambda.degree_cap() == m.cap)) return lambda;
  return lambda.embed(m.vars, m.cap);
}

/// Traceless basis of M_n: off-diagonal E_ab, then E_aa - E_nn.
std::vector<MatC> traceless_basis(int n) {
  std::vector<MatC> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (a != b) out.push_back(elementary(n, a, b));
    }
  }
  for (int a = 1; a < n; ++a) out.push_back(elementary(n, a, a) - elementary(n, n, n));
  return out;
}

/// Coordinates of a traceless matrix in traceless_basis(n).
Eigen::VectorXcd traceless_coords(const MatC& m) {
  const auto n = static_cast<int>(m.rows());
  Eigen::VectorXcd c(n * n - 1);
  int r = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) c(r++) = m(a, b);
    }
  }
  for (int a = 0; a + 1 < n; ++a) c(r++) = m(a, a);
  return c;
}

}  // namespace

HamiltonianMap::HamiltonianMap(Model model, int domain_degree) : model_(model) {
  if (model_.vars == 0) model_.cap = 0;
  domain_degree_ = model_.vars == 0 ? 0 : domain_degree;
  if (domain_degree_ < 0 || domain_degree_ > model_.cap) {
    throw Error(ErrorCode::InvalidArgument, "domain degree must lie in [0, cap]");
  }
  monomials_ = monomials_up_to(model_.vars, domain_degree_);
  table_.assign(monomials_.size() * model_.n * model_.n, PolyMat(model_));
}

HamiltonianMap HamiltonianMap::tabulate(const Model& model, int domain_degree, const Fn& f) {
  HamiltonianMap h(model, domain_degree);
  const int n = h.model_.n;
  for (std::size_t k = 0; k < h.monomials_.size(); ++k) {
    const Poly mono = Poly::monomial(h.monomials_[k], 1.0, h.model_.vars, h.model_.cap);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        PolyMat image = f(PolyMat::unit_section(h.model_, i, j, mono));
        if (!(image.model() == h.model_)) throw Error(ErrorCode::DimensionMismatch, "map leaves the model");
        h.table_[(k * n + i) * n + j] = traceless_part(image);
      }
    }
  }
  return h;
}

HamiltonianMap HamiltonianMap::scalar_multiple(const Model& model, int domain_degree, const Poly& lambda) {
  const Poly l = lift_lambda(lambda, model);
  return tabulate(model, domain_degree, [&l](const PolyMat& a) { return l * traceless_part(a); });
}

const PolyMat& HamiltonianMap::image(std::size_t mono, int i, int j) const {
  const int n = model_.n;
  if (mono >= monomials_.size() || i < 0 || j < 0 || i >= n || j >= n) {
    throw Error(ErrorCode::IndexOutOfRange, "Hamiltonian table index");
  }
  return table_[(mono * n + i) * n + j];
}

PolyMat HamiltonianMap::apply(const PolyMat& a) const {
  if (!(a.model() == model_)) throw Error(ErrorCode::DimensionMismatch, "Hamiltonian map on another model");
  if (a.degree() > domain_degree_) {
    throw Error(ErrorCode::DegreeOverflow, "argument of degree " + std::to_string(a.degree()) +
                                               " outside tabulated domain " + std::to_string(domain_degree_));
  }
  const int n = model_.n;
  PolyMat out(model_);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (const auto& [e, c] : a(i, j).terms()) {
        const auto k = static_cast<std::size_t>(std::find(monomials_.begin(), monomials_.end(), e) - monomials_.begin());
        out += table_[(k * n + i) * n + j] * c;
      }
    }
  }
  return out;
}

int HamiltonianMap::degree_growth() const {
  int growth = 0;
  const int n = model_.n;
  for (std::size_t k = 0; k < monomials_.size(); ++k) {
    for (int q = 0; q < n * n; ++q) {
      growth = std::max(growth, table_[k * n * n + q].degree() - total_degree(monomials_[k]));
    }
  }
  return growth;
}

Bracket Bracket::scalar(Scalar k) {
  if (!is_finite(k)) throw Error(ErrorCode::NonFinite, "bracket scalar");
  return Bracket(k);
}

Bracket Bracket::polynomial(Poly lambda) { return Bracket(std::move(lambda)); }

Bracket Bracket::hamiltonian(HamiltonianMap f) { return Bracket(std::move(f)); }

PolyMat Bracket::ham_generator(const PolyMat& a) const {
  if (const auto* k = std::get_if<Scalar>(&form_)) return a * *k;
  if (const auto* l = std::get_if<Poly>(&form_)) return lift_lambda(*l, a.model()) * a;
  return std::get<HamiltonianMap>(form_).apply(a);
}

PolyMat Bracket::eval(const PolyMat& a, const PolyMat& b) const {
  if (!(a.model() == b.model())) throw Error(ErrorCode::DimensionMismatch, "bracket arguments on different models");
  if (const auto* k = std::get_if<Scalar>(&form_)) return commutator(a, b) * *k;
  if (const auto* l = std::get_if<Poly>(&form_)) return lift_lambda(*l, a.model()) * commutator(a, b);
  return commutator(std::get<HamiltonianMap>(form_).apply(a), b);
}

Derivation Bracket::ham(const PolyMat& a) const { return Derivation::inner(ham_generator(a)); }

int Bracket::degree_growth() const {
  if (std::holds_alternative<Scalar>(form_)) return 0;
  if (const auto* l = std::get_if<Poly>(&form_)) return std::max(0, l->degree());
  return std::get<HamiltonianMap>(form_).degree_growth();
}

PolyMat bracket_eval(const Bracket& b, const PolyMat& x, const PolyMat& y) { return b.eval(x, y); }

PolyMat biderivation_defect(const BracketFn& br, const PolyMat& a, const PolyMat& b, const PolyMat& c) {
  return br(a, b * c) - b * br(a, c) - br(a, b) * c;
}

PolyMat biderivation_defect(const Bracket& br, const PolyMat& a, const PolyMat& b, const PolyMat& c) {
  return biderivation_defect([&br](const PolyMat& x, const PolyMat& y) { return br.eval(x, y); }, a, b, c);
}

PolyMat jacobiator(const BracketFn& br, const PolyMat& a, const PolyMat& b, const PolyMat& c) {
  return br(br(a, b), c) + br(br(b, c), a) + br(br(c, a), b);
}

PolyMat jacobiator(const Bracket& br, const PolyMat& a, const PolyMat& b, const PolyMat& c) {
  return jacobiator([&br](const PolyMat& x, const PolyMat& y) { return br.eval(x, y); }, a, b, c);
}

PolyMat h2_defect(const HamiltonianMap& f, const PolyMat& a, const PolyMat& b) {
  return commutator(f.apply(a), b) - commutator(a, f.apply(b));
}

PolyMat h3_defect(const HamiltonianMap& f, const PolyMat& a, const PolyMat& b, const PolyMat& c) {
  const auto ff = [&f](const PolyMat& x) { return f.apply(f.apply(x)); };
  return commutator(commutator(ff(a), b), c) + commutator(commutator(ff(b), c), a) +
         commutator(commutator(ff(c), a), b);
}

HamiltonianDefects hamiltonian_checks(const HamiltonianMap& f) {
  const Model& m = f.model();
  const auto& monos = f.monomials();
  HamiltonianDefects d;

  std::vector<PolyMat> domain;
  for (const auto& e : monos) {
    const Poly mono = Poly::monomial(e, 1.0, m.vars, m.cap);
    for (int i = 0; i < m.n; ++i) {
      for (int j = 0; j < m.n; ++j) domain.push_back(PolyMat::unit_section(m, i, j, mono));
    }
  }

  for (const auto& ez : monos) {
    const Poly z = Poly::monomial(ez, 1.0, m.vars, m.cap);
    for (const auto& a : domain) {
      if (total_degree(ez) + a.degree() > f.domain_degree()) continue;
      d.h1 = std::max(d.h1, defect_or_inf([&] { return distance(f.apply(z * a), z * f.apply(a)); }));
    }
  }

  const auto basis = units(m);
  for (const auto& a : domain) {
    for (const auto& b : basis) {
      d.h2 = std::max(d.h2, defect_or_inf([&] { return h2_defect(f, a, b).max_abs(); }));
    }
  }

  std::vector<std::optional<PolyMat>> squares;
  for (const auto& a : basis) {
    try {
      squares.emplace_back(f.apply(f.apply(a)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegreeOverflow) throw;
      squares.emplace_back(std::nullopt);
    }
  }
  const std::size_t nb = basis.size();
  for (std::size_t a = 0; a < nb; ++a) {
    for (std::size_t b = 0; b < nb; ++b) {
      for (std::size_t c = 0; c < nb; ++c) {
        if (!squares[a] || !squares[b] || !squares[c]) {
          d.h3 = kInf;
          continue;
        }
        const double h3 = defect_or_inf([&] {
          return (commutator(commutator(*squares[a], basis[b]), basis[c]) +
                  commutator(commutator(*squares[b], basis[c]), basis[a]) +
                  commutator(commutator(*squares[c], basis[a]), basis[b]))
              .max_abs();
        });
        d.h3 = std::max(d.h3, h3);
      }
    }
  }
  return d;
}

ClassificationResult classify_matrix_brackets(int n, double tol) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  const Model model = Model::matrix(n);
  ClassificationResult result;
  result.n = n;
  result.generator = HamiltonianMap::tabulate(model, 0, [&model](const PolyMat&) { return PolyMat(model); });
  if (n == 1) return result;

  const int nn = n * n;
  const auto tb = traceless_basis(n);
  const int dim_t = nn - 1;
  std::vector<MatC> e;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) e.push_back(elementary(n, i, j));
  }

  // Unknown c(q, r): f(E_q) = sum_r c(q, r) T_r, at column q * dim_t + r.
  MatC a = MatC::Zero(static_cast<Eigen::Index>(nn) * nn * nn, static_cast<Eigen::Index>(nn) * dim_t);
  for (int q = 0; q < nn; ++q) {
    for (int p = 0; p < nn; ++p) {
      const Eigen::Index row0 = (static_cast<Eigen::Index>(q) * nn + p) * nn;
      for (int r = 0; r < dim_t; ++r) {
        // [f(E_q), E_p] - [E_q, f(E_p)]
        a.block(row0, static_cast<Eigen::Index>(q) * dim_t + r, nn, 1) += vec(commutator(tb[r], e[p]));
        a.block(row0, static_cast<Eigen::Index>(p) * dim_t + r, nn, 1) -= vec(commutator(e[q], tb[r]));
      }
    }
  }
  const MatC null = linalg::nullspace(a, tol);
  result.space_dim = static_cast<int>(null.cols());
  if (result.space_dim != 1) {
    throw Error(ErrorCode::ClassificationMismatch,
                "H2 solution space has dimension " + std::to_string(result.space_dim) + ", expected 1");
  }

  Eigen::VectorXcd target(static_cast<Eigen::Index>(nn) * dim_t);
  for (int q = 0; q < nn; ++q) target.segment(static_cast<Eigen::Index>(q) * dim_t, dim_t) = traceless_coords(traceless_part(e[q]));
  Eigen::VectorXcd g = null.col(0);
  // Fix the phase so the proportionality constant is real and positive.
  const Scalar overlap = target.dot(g);
  if (std::abs(overlap) > 0.0) g *= std::conj(overlap) / std::abs(overlap);
  result.k = target.dot(g) / target.squaredNorm();
  result.proportionality_deviation = (g - result.k * target).cwiseAbs().maxCoeff();
  if (!within_tol(result.proportionality_deviation, 1.0, tol)) {
    throw Error(ErrorCode::ClassificationMismatch, "generator is not proportional to traceless_part");
  }

  std::vector<MatC> images;
  for (int q = 0; q < nn; ++q) {
    MatC img = MatC::Zero(n, n);
    for (int r = 0; r < dim_t; ++r) img += g(static_cast<Eigen::Index>(q) * dim_t + r) * tb[r];
    images.push_back(img);
  }
  result.generator = HamiltonianMap::tabulate(model, 0, [&](const PolyMat& x) {
    const MatC xm = x.constant_matrix();
    MatC out = MatC::Zero(n, n);
    for (int q = 0; q < nn; ++q) out += xm(q / n, q % n) * images[q];
    return PolyMat::from_matrix(out);
  });

  const Bracket br = Bracket::hamiltonian(result.generator);
  const auto basis = units(model);
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      for (const auto& z : basis) result.jacobi_residual = std::max(result.jacobi_residual, jacobiator(br, x, y, z).max_abs());
    }
  }
  result.h3_residual = hamiltonian_checks(result.generator).h3;
  return result;
}

Poly classify_bundle_bracket(const HamiltonianMap& f, double tol) {
  const Model& m = f.model();
  if (m.n < 2) throw Error(ErrorCode::Unsupported, "bundle classification needs fiber dimension >= 2");
  const HamiltonianDefects d = hamiltonian_checks(f);
  if (!within_tol(d.h1, 1.0, tol)) throw Error(ErrorCode::NotModuleMap, "H1 defect " + std::to_string(d.h1));
  if (!within_tol(d.h2, 1.0, tol)) throw Error(ErrorCode::NotAntisymmetric, "H2 defect " + std::to_string(d.h2));

  // f(E_12) = lambda * E_12
  const Poly lambda = f.image(0, 0, 1)(0, 1);
  const auto& monos = f.monomials();
  for (std::size_t k = 0; k < monos.size(); ++k) {
    const Poly mono = Poly::monomial(monos[k], 1.0, m.vars, m.cap);
    for (int i = 0; i < m.n; ++i) {
      for (int j = 0; j < m.n; ++j) {
        const double defect = defect_or_inf([&] {
          const PolyMat expected = (mono * lambda) * traceless_part(unit(m, i, j));
          return distance(f.image(k, i, j), expected);
        });
        if (!within_tol(defect, lambda.max_abs(), tol)) {
          throw Error(ErrorCode::Inconsistent, "read-off lambda does not reproduce the table");
        }
      }
    }
  }
  return lambda;
}

Nondegeneracy is_nondegenerate(const Bracket& b, const Model& model, double tol) {
  Nondegeneracy out;
  if (model.is_matrix()) {
    const int n = model.n;
    const int nn = n * n;
    const DerivationSpace space = derivation_space(n, tol);
    out.der_dim = space.dim;
    const auto basis = units(model);
    MatC hams(static_cast<Eigen::Index>(nn) * nn, nn);
    for (int q = 0; q < nn; ++q) hams.col(q) = b.ham(basis[q]).to_table().reshaped();
    out.span_dim = nn == 0 ? 0 : linalg::rank(hams, tol);
    // A rank-deficient zero matrix has rank 0 under the relative threshold.
    if (max_abs(hams) == 0.0) out.span_dim = 0;
    out.nondegenerate = out.span_dim == out.der_dim;
    if (!out.nondegenerate) {
      // Derivation-space basis element farthest from the Hamiltonian span.
      MatC range;
      if (out.span_dim > 0) {
        Eigen::BDCSVD<MatC> svd(hams, Eigen::ComputeThinU);
        range = svd.matrixU().leftCols(out.span_dim);
      }
      double best = -1.0;
      for (const auto& d : space.basis) {
        Eigen::VectorXcd v = d.to_table().reshaped();
        if (out.span_dim > 0) v -= range * (range.adjoint() * v);
        if (v.norm() > best) {
          best = v.norm();
          out.witness = d;
        }
      }
    }
    return out;
  }

  // Bundle model: every Hamiltonian derivation is inner and kills the center, while D_{d/dt_1} does not.
  out.der_dim = -1;
  out.span_dim = -1;
  const Derivation witness = Derivation::covariant(Connection::flat(model), VectorField::coordinate(0, model.vars, model.cap));
  std::vector<PolyMat> center{PolyMat::identity(model)};
  for (int v = 0; v < model.vars; ++v) center.push_back(PolyMat::scalar_section(Poly::variable(v, model.vars, model.cap), model.n));
  double ham_motion = 0.0;
  for (const auto& s : units(model)) {
    const Derivation h = b.ham(s);
    for (const auto& z : center) ham_motion = std::max(ham_motion, h.apply(z).max_abs());
  }
  const double witness_motion = witness.apply(center.at(1)).max_abs();
  if (!within_tol(ham_motion, 1.0, tol)) {
    throw Error(ErrorCode::Inconsistent, "a Hamiltonian derivation moves the center");
  }
  out.nondegenerate = within_tol(witness_motion, 1.0, tol);
  if (!out.nondegenerate) out.witness = witness;
  return out;
}

PolyMat center_comm_check(const Bracket& b, const PolyMat& z, const PolyMat& a, const PolyMat& c, double tol) {
  double motion = 0.0;
  for (const auto& e : units(z.model())) motion = std::max(motion, commutator(z, e).max_abs());
  if (!within_tol(motion, z.max_abs(), tol)) throw Error(ErrorCode::NotCentral, "z does not commute with E_ij");
  return b.eval(z, commutator(a, c));
}

ProjectorBlock projector_block_check(const Bracket& b, const PolyMat& p, const PolyMat& a, double tol) {
  if (!within_tol(distance(p * p, p), p.max_abs(), tol)) throw Error(ErrorCode::NotIdempotent, "p^2 != p");
  const PolyMat one = PolyMat::identity(p.model());
  const PolyMat q = b.eval(a, p);
  const PolyMat co = one - p;
  ProjectorBlock out;
  out.identity_defect = distance(q * co, p * q);
  out.block_leak = (p * q * p).max_abs() + (co * q * co).max_abs();
  return out;
}

}  // namespace ncpoisson
