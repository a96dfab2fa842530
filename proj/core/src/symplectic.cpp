#include "ncpoisson/symplectic.hpp"

#include <memory>

#include "ncpoisson/algebra.hpp"
#include "ncpoisson/linalg.hpp"

namespace ncpoisson {

namespace {

/// Columns: traceless generators of ham(E_q) on M_n.
MatC ham_generator_matrix(const Bracket& b, int n) {
  const Model model = Model::matrix(n);
  const Poly one = Poly::constant(1.0, 0, 0);
  MatC l(n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      l.col(i * n + j) = vec(traceless_part(b.ham_generator(PolyMat::unit_section(model, i, j, one)).constant_matrix()));
    }
  }
  return l;
}

PolyMat preimage_with(const MatC& l, const Derivation& d, double tol) {
  const int n = d.model().n;
  const MatC g = solve_inner_generator(d, tol).constant_matrix();
  const auto sol = linalg::solve(l, vec(g), tol);
  if (!within_tol(sol.residual, max_abs(g), tol)) {
    throw Error(ErrorCode::NotInner, "derivation is not Hamiltonian (residual " + std::to_string(sol.residual) + ")");
  }
  return PolyMat::from_matrix(unvec(sol.x, n));
}

}  // namespace

TwoForm TwoForm::zero(const Model& model) {
  return TwoForm(model, [model](const Derivation&, const Derivation&) { return PolyMat(model); });
}

PolyMat hamiltonian_preimage(const Bracket& b, const Derivation& d, double tol) {
  if (!d.model().is_matrix()) throw Error(ErrorCode::DimensionMismatch, "Hamiltonian preimages are solved on M_n");
  return preimage_with(ham_generator_matrix(b, d.model().n), d, tol);
}

TwoForm form_from_bracket(const Bracket& b, int n, double tol) {
  const Model model = Model::matrix(n);
  if (!is_nondegenerate(b, model, tol).nondegenerate) {
    throw Error(ErrorCode::Degenerate, "bracket does not generate every derivation");
  }
  auto l = std::make_shared<const MatC>(ham_generator_matrix(b, n));
  return TwoForm(
      model,
      [b, l, tol](const Derivation& x, const Derivation& y) {
        return b.eval(preimage_with(*l, x, tol), preimage_with(*l, y, tol));
      },
      b);
}

PolyMat form_on_representations(const Bracket& b, const HamRepresentation& x, const HamRepresentation& y) {
  if (x.empty() || y.empty()) throw Error(ErrorCode::InvalidArgument, "empty Hamiltonian representation");
  PolyMat acc(x.front().second.model());
  for (const auto& [u, xi] : x) {
    for (const auto& [v, yj] : y) acc += b.eval(xi, yj) * (u * v);
  }
  return acc;
}

Derivation derivation_of(const Bracket& b, const HamRepresentation& rep) {
  if (rep.empty()) throw Error(ErrorCode::InvalidArgument, "empty Hamiltonian representation");
  std::vector<Derivation> parts;
  for (const auto& [u, x] : rep) parts.push_back(Derivation::scaled(u, b.ham(x)));
  return Derivation::sum(std::move(parts));
}

OneForm interior(const TwoForm& omega, const Derivation& x) {
  return OneForm([omega, x](const Derivation& y) { return omega(x, y); });
}

OneForm exact_differential(const PolyMat& a) {
  return OneForm([a](const Derivation& y) { return y.apply(a); });
}

PolyMat exterior_derivative(const TwoForm& omega, const Derivation& x, const Derivation& y, const Derivation& z) {
  return x.apply(omega(y, z)) - y.apply(omega(x, z)) + z.apply(omega(x, y)) - omega(der_bracket(x, y), z) +
         omega(der_bracket(x, z), y) - omega(der_bracket(y, z), x);
}

FormNondegeneracy is_nondegenerate_form(const TwoForm& omega, int n, double tol) {
  const DerivationSpace space = derivation_space(n, tol);
  const int dim = space.dim;
  const int nn = n * n;
  FormNondegeneracy out;
  if (dim == 0) {
    out.nondegenerate = true;
    return out;
  }
  // Row block s, column r: omega(D_r, D_s).
  MatC m(static_cast<Eigen::Index>(dim) * nn, dim);
  for (int r = 0; r < dim; ++r) {
    for (int s = 0; s < dim; ++s) {
      m.block(static_cast<Eigen::Index>(s) * nn, r, nn, 1) = vec(omega(space.basis[r], space.basis[s]).constant_matrix());
    }
  }
  out.kernel_dim = dim - (max_abs(m) == 0.0 ? 0 : linalg::rank(m, tol));

  const Model model = Model::matrix(n);
  const Poly one = Poly::constant(1.0, 0, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const PolyMat a = PolyMat::unit_section(model, i, j, one);
      Eigen::VectorXcd rhs(static_cast<Eigen::Index>(dim) * nn);
      for (int s = 0; s < dim; ++s) rhs.segment(static_cast<Eigen::Index>(s) * nn, nn) = -vec(space.basis[s].apply(a).constant_matrix());
      out.max_residual = std::max(out.max_residual, linalg::solve(m, rhs, tol).residual);
    }
  }
  out.nondegenerate = out.kernel_dim == 0 && within_tol(out.max_residual, 1.0, tol);
  return out;
}

}  // namespace ncpoisson
