#include "ncpoisson/derivation.hpp"

#include <variant>

#include "ncpoisson/algebra.hpp"
#include "ncpoisson/linalg.hpp"
#include "ncpoisson/sampling.hpp"

namespace ncpoisson {

namespace {

struct InnerNode {
  PolyMat generator;
};
struct CovariantNode {
  Connection conn;
  VectorField field;
};
struct TableNode {
  MatC matrix;
};
struct SumNode {
  std::vector<Derivation> parts;
};
struct ScaledNode {
  Poly factor;
  Derivation inner;
};
struct CommutatorNode {
  Derivation left;
  Derivation right;
};

constexpr std::uint64_t kTableCheckSeed = 0x5eed7ab1eULL;
constexpr int kTableCheckPairs = 8;

/// Rows: (basis q, output coordinate); columns: coordinates of g. Encodes g -> ([g, E_q])_q.
MatC ad_system(int n) {
  const int nn = n * n;
  MatC k = MatC::Zero(static_cast<Eigen::Index>(nn) * nn, nn);
  for (int kk = 0; kk < n; ++kk) {
    for (int l = 0; l < n; ++l) {
      const int q = kk * n + l;
      for (int r = 0; r < n; ++r) {
        for (int s = 0; s < n; ++s) {
          const Eigen::Index row = static_cast<Eigen::Index>(q) * nn + r * n + s;
          // (g E_kl)(r,s) = g(r,k) [l == s]
          if (l == s) k(row, r * n + kk) += 1.0;
          // (E_kl g)(r,s) = [r == k] g(l,s)
          if (r == kk) k(row, l * n + s) -= 1.0;
        }
      }
    }
  }
  return k;
}

std::vector<PolyMat> basis_sections(const Model& model, bool with_linear) {
  std::vector<PolyMat> out;
  const Poly one = Poly::constant(1.0, model.vars, model.cap);
  for (int i = 0; i < model.n; ++i) {
    for (int j = 0; j < model.n; ++j) out.push_back(PolyMat::unit_section(model, i, j, one));
  }
  if (with_linear && model.vars > 0 && model.cap >= 1) {
    for (int v = 0; v < model.vars; ++v) {
      const Poly t = Poly::variable(v, model.vars, model.cap);
      for (int i = 0; i < model.n; ++i) {
        for (int j = 0; j < model.n; ++j) out.push_back(PolyMat::unit_section(model, i, j, t));
      }
    }
  }
  return out;
}

}  // namespace

struct Derivation::Node {
  Model model;
  std::variant<InnerNode, CovariantNode, TableNode, SumNode, ScaledNode, CommutatorNode> v;
};

Derivation Derivation::inner(PolyMat generator) {
  Model m = generator.model();
  return Derivation(std::make_shared<const Node>(Node{m, InnerNode{std::move(generator)}}));
}

Derivation Derivation::covariant(Connection conn, VectorField field) {
  if (field.num_vars() != conn.model().vars || field.degree_cap() != conn.model().cap) {
    throw Error(ErrorCode::DimensionMismatch, "vector field and connection live on different bases");
  }
  Model m = conn.model();
  return Derivation(std::make_shared<const Node>(Node{m, CovariantNode{std::move(conn), std::move(field)}}));
}

Derivation Derivation::raw_table(int n, MatC matrix) {
  if (n < 1 || matrix.rows() != n * n || matrix.cols() != n * n) {
    throw Error(ErrorCode::DimensionMismatch, "table must be n^2 x n^2");
  }
  for (Eigen::Index k = 0; k < matrix.size(); ++k) {
    if (!is_finite(matrix.data()[k])) throw Error(ErrorCode::NonFinite, "table entry");
  }
  return Derivation(std::make_shared<const Node>(Node{Model::matrix(n), TableNode{std::move(matrix)}}));
}

Derivation Derivation::table(int n, MatC matrix, double tol) {
  Derivation d = raw_table(n, std::move(matrix));
  const double defect = sampled_leibniz_defect(d, kTableCheckSeed, kTableCheckPairs, 0);
  if (!within_tol(defect, max_abs(d.table_matrix()), tol)) {
    throw Error(ErrorCode::InvalidArgument, "table violates the Leibniz rule (defect " + std::to_string(defect) + ")");
  }
  return d;
}

Derivation Derivation::sum(std::vector<Derivation> parts) {
  if (parts.empty()) throw Error(ErrorCode::InvalidArgument, "empty derivation sum");
  const Model m = parts.front().model();
  for (const auto& p : parts) {
    if (!(p.model() == m)) throw Error(ErrorCode::DimensionMismatch, "summands live on different models");
  }
  return Derivation(std::make_shared<const Node>(Node{m, SumNode{std::move(parts)}}));
}

Derivation Derivation::scaled(Poly factor, Derivation d) {
  const Model m = d.model();
  if (factor.num_vars() != m.vars || (m.vars != 0 && factor.degree_cap() != m.cap)) {
    throw Error(ErrorCode::DimensionMismatch, "central factor from a different ring");
  }
  return Derivation(std::make_shared<const Node>(Node{m, ScaledNode{std::move(factor), std::move(d)}}));
}

Derivation Derivation::scaled(Scalar factor, Derivation d) {
  const Model m = d.model();
  return scaled(Poly::constant(factor, m.vars, m.cap), std::move(d));
}

Derivation Derivation::commutator(Derivation a, Derivation b) {
  if (!(a.model() == b.model())) throw Error(ErrorCode::DimensionMismatch, "derivations on different models");
  const Model m = a.model();
  return Derivation(std::make_shared<const Node>(Node{m, CommutatorNode{std::move(a), std::move(b)}}));
}

Derivation::Kind Derivation::kind() const { return static_cast<Kind>(node_->v.index()); }

const Model& Derivation::model() const { return node_->model; }

PolyMat Derivation::apply(const PolyMat& a) const {
  if (!(a.model() == model())) {
    throw Error(ErrorCode::DimensionMismatch, "derivation applied to a section of another model");
  }
  return std::visit(
      [&](const auto& node) -> PolyMat {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, InnerNode>) {
          return ncpoisson::commutator(node.generator, a);
        } else if constexpr (std::is_same_v<T, CovariantNode>) {
          return node.field.apply(a) + ncpoisson::commutator(node.conn.contract(node.field), a);
        } else if constexpr (std::is_same_v<T, TableNode>) {
          const Eigen::VectorXcd out = node.matrix * vec(a.constant_matrix());
          return PolyMat::from_matrix(unvec(out, model().n));
        } else if constexpr (std::is_same_v<T, SumNode>) {
          PolyMat acc = node.parts.front().apply(a);
          for (std::size_t k = 1; k < node.parts.size(); ++k) acc += node.parts[k].apply(a);
          return acc;
        } else if constexpr (std::is_same_v<T, ScaledNode>) {
          return node.factor * node.inner.apply(a);
        } else {
          return node.left.apply(node.right.apply(a)) - node.right.apply(node.left.apply(a));
        }
      },
      node_->v);
}

MatC Derivation::to_table() const {
  if (!model().is_matrix()) throw Error(ErrorCode::DimensionMismatch, "tables exist only for the matrix model");
  const int n = model().n;
  MatC t(n * n, n * n);
  const auto basis = basis_sections(model(), false);
  for (int q = 0; q < n * n; ++q) t.col(q) = vec(apply(basis[q]).constant_matrix());
  return t;
}

const PolyMat& Derivation::generator() const {
  if (auto* p = std::get_if<InnerNode>(&node_->v)) return p->generator;
  throw Error(ErrorCode::InvalidArgument, "not an inner derivation");
}

const Connection& Derivation::connection() const {
  if (auto* p = std::get_if<CovariantNode>(&node_->v)) return p->conn;
  throw Error(ErrorCode::InvalidArgument, "not a covariant derivation");
}

const VectorField& Derivation::field() const {
  if (auto* p = std::get_if<CovariantNode>(&node_->v)) return p->field;
  throw Error(ErrorCode::InvalidArgument, "not a covariant derivation");
}

const MatC& Derivation::table_matrix() const {
  if (auto* p = std::get_if<TableNode>(&node_->v)) return p->matrix;
  throw Error(ErrorCode::InvalidArgument, "not a table derivation");
}

const std::vector<Derivation>& Derivation::parts() const {
  if (auto* p = std::get_if<SumNode>(&node_->v)) return p->parts;
  throw Error(ErrorCode::InvalidArgument, "not a derivation sum");
}

PolyMat leibniz_defect(const Derivation& d, const PolyMat& a, const PolyMat& b) {
  return d.apply(a * b) - d.apply(a) * b - a * d.apply(b);
}

double sampled_leibniz_defect(const Derivation& d, std::uint64_t seed, int pairs, int max_degree) {
  Rng rng(seed);
  double worst = 0.0;
  for (int k = 0; k < pairs; ++k) {
    const PolyMat a = random_section(rng, d.model(), max_degree);
    const PolyMat b = random_section(rng, d.model(), max_degree);
    worst = std::max(worst, leibniz_defect(d, a, b).max_abs());
  }
  return worst;
}

DerivationSpace derivation_space(int n, double tol) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  const int nn = n * n;
  const auto idx = [n](int r, int s) { return r * n + s; };
  // Unknown D(p, q): coordinate p of D(E_q), stored at p * nn + q.
  const auto unknown = [nn](int p, int q) { return static_cast<Eigen::Index>(p) * nn + q; };
  MatC a = MatC::Zero(static_cast<Eigen::Index>(nn) * nn * nn, static_cast<Eigen::Index>(nn) * nn);
  Eigen::Index row = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          for (int r = 0; r < n; ++r) {
            for (int s = 0; s < n; ++s, ++row) {
              // D(E_ij E_kl) = [j == k] D(E_il)
              if (j == k) a(row, unknown(idx(r, s), idx(i, l))) += 1.0;
              // (D(E_ij) E_kl)(r,s) = D(E_ij)(r,k) [l == s]
              if (l == s) a(row, unknown(idx(r, k), idx(i, j))) -= 1.0;
              // (E_ij D(E_kl))(r,s) = [r == i] D(E_kl)(j,s)
              if (r == i) a(row, unknown(idx(j, s), idx(k, l))) -= 1.0;
            }
          }
        }
      }
    }
  }
  const MatC null = linalg::nullspace(a, tol);
  DerivationSpace space;
  space.n = n;
  for (Eigen::Index c = 0; c < null.cols(); ++c) {
    MatC table(nn, nn);
    for (int p = 0; p < nn; ++p) {
      for (int q = 0; q < nn; ++q) table(p, q) = null(unknown(p, q), c);
    }
    space.basis.push_back(Derivation::raw_table(n, std::move(table)));
  }
  space.dim = static_cast<int>(space.basis.size());
  return space;
}

InnerSolve solve_inner_generator_with_residual(const Derivation& d, double tol) {
  const Model& model = d.model();
  const int n = model.n;
  const int nn = n * n;

  std::vector<PolyMat> center{PolyMat::identity(model)};
  if (model.vars > 0 && model.cap >= 1) {
    for (int v = 0; v < model.vars; ++v) {
      center.push_back(PolyMat::scalar_section(Poly::variable(v, model.vars, model.cap), n));
    }
  }
  for (const auto& z : center) {
    const PolyMat image = d.apply(z);
    if (!within_tol(image.max_abs(), 1.0, tol)) {
      throw Error(ErrorCode::CenterNotKilled, "derivation moves a central element by " + std::to_string(image.max_abs()));
    }
  }

  const auto basis = basis_sections(model, false);
  std::vector<PolyMat> images;
  images.reserve(basis.size());
  double scale = 0.0;
  std::vector<Exponent> support;
  for (const auto& e : basis) {
    images.push_back(d.apply(e));
    scale = std::max(scale, images.back().max_abs());
    for (const auto& m : images.back().support()) {
      if (std::find(support.begin(), support.end(), m) == support.end()) support.push_back(m);
    }
  }

  const MatC k = ad_system(n);
  InnerSolve out{PolyMat(model), 0.0};
  for (const auto& mono : support) {
    Eigen::VectorXcd rhs(static_cast<Eigen::Index>(nn) * nn);
    for (int q = 0; q < nn; ++q) rhs.segment(static_cast<Eigen::Index>(q) * nn, nn) = vec(images[q].coefficient(mono));
    const auto sol = linalg::solve(k, rhs, tol);
    out.residual = std::max(out.residual, sol.residual);
    const MatC g = traceless_part(unvec(sol.x, n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (g(i, j) == Scalar{}) continue;
        out.generator.set(i, j, out.generator(i, j) + Poly::monomial(mono, g(i, j), model.vars, model.cap));
      }
    }
  }
  return out;
}

PolyMat solve_inner_generator(const Derivation& d, double tol) {
  InnerSolve s = solve_inner_generator_with_residual(d, tol);
  // Relative to the size of D's images.
  if (!within_tol(s.residual, 1.0, tol)) {
    throw Error(ErrorCode::NotInner, "least-squares residual " + std::to_string(s.residual));
  }
  return std::move(s.generator);
}

std::vector<PolyMat> center_basis(int n, int num_vars, int degree_cap) {
  std::vector<PolyMat> out;
  for (const auto& e : monomials_up_to(num_vars, num_vars == 0 ? 0 : degree_cap)) {
    out.push_back(PolyMat::scalar_section(Poly::monomial(e, 1.0, num_vars, degree_cap), n));
  }
  return out;
}

Commutant commutant_of_units(const Model& model, double tol) {
  const int n = model.n;
  const int nn = n * n;
  const auto monos = monomials_up_to(model.vars, model.vars == 0 ? 0 : model.cap);
  const auto blocks = static_cast<Eigen::Index>(monos.size());
  const MatC k = ad_system(n);
  MatC a = MatC::Zero(blocks * k.rows(), blocks * nn);
  for (Eigen::Index b = 0; b < blocks; ++b) a.block(b * k.rows(), b * nn, k.rows(), nn) = k;
  const MatC null = linalg::nullspace(a, tol);

  Commutant out;
  out.dim = static_cast<int>(null.cols());
  for (Eigen::Index c = 0; c < null.cols(); ++c) {
    for (Eigen::Index b = 0; b < blocks; ++b) {
      const MatC block = unvec(null.col(c).segment(b * nn, nn), n);
      out.containment_residual = std::max(out.containment_residual, max_abs(traceless_part(block)));
    }
  }
  return out;
}

Derivation der_bracket(const Derivation& a, const Derivation& b) { return Derivation::commutator(a, b); }

double basis_distance(const Derivation& a, const Derivation& b) {
  if (!(a.model() == b.model())) throw Error(ErrorCode::DimensionMismatch, "derivations on different models");
  double worst = 0.0;
  for (const auto& s : basis_sections(a.model(), true)) worst = std::max(worst, distance(a.apply(s), b.apply(s)));
  return worst;
}

}  // namespace ncpoisson
