#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "ncpoisson/derivation.hpp"

namespace ncpoisson {

/// Linear map f: A -> A/Z(A) tabulated on the C-basis {monomial * E_ij} of the capped model,
/// for monomials up to domain_degree. Outputs are stored traceless.
class HamiltonianMap {
 public:
  using Fn = std::function<PolyMat(const PolyMat&)>;

  /// Zero map on M_1.
  HamiltonianMap() : HamiltonianMap(Model::matrix(1), 0) {}

  /// Tabulates f on every basis element; outputs are traceless-normalized.
  static HamiltonianMap tabulate(const Model& model, int domain_degree, const Fn& f);
  /// f = lambda * traceless_part
  static HamiltonianMap scalar_multiple(const Model& model, int domain_degree, const Poly& lambda);

  const Model& model() const { return model_; }
  int domain_degree() const { return domain_degree_; }
  const std::vector<Exponent>& monomials() const { return monomials_; }
  /// f(monomial_k * E_ij), 0-based.
  const PolyMat& image(std::size_t mono, int i, int j) const;
  /// Linear extension; throws DegreeOverflow if the argument leaves the tabulated domain.
  PolyMat apply(const PolyMat& a) const;
  /// Max degree gained by f over the table.
  int degree_growth() const;

 private:
  HamiltonianMap(Model model, int domain_degree);

  Model model_;
  int domain_degree_ = 0;
  std::vector<Exponent> monomials_;
  std::vector<PolyMat> table_;
};

/// Antisymmetric biderivation, either k*[a,b], lambda*[a,b], or [f(a), b].
class Bracket {
 public:
  static Bracket scalar(Scalar k);
  static Bracket polynomial(Poly lambda);
  static Bracket hamiltonian(HamiltonianMap f);

  PolyMat eval(const PolyMat& a, const PolyMat& b) const;
  /// ham(a) = {a, .}, always inner.
  Derivation ham(const PolyMat& a) const;
  /// Generator g with ham(a) = ad(g).
  PolyMat ham_generator(const PolyMat& a) const;
  /// Max degree the bracket adds on top of deg a + deg b.
  int degree_growth() const;

  bool is_scalar() const { return std::holds_alternative<Scalar>(form_); }
  bool is_polynomial() const { return std::holds_alternative<Poly>(form_); }
  bool is_hamiltonian() const { return std::holds_alternative<HamiltonianMap>(form_); }
  Scalar scalar_k() const { return std::get<Scalar>(form_); }
  const Poly& lambda() const { return std::get<Poly>(form_); }
  const HamiltonianMap& map() const { return std::get<HamiltonianMap>(form_); }

 private:
  explicit Bracket(std::variant<Scalar, Poly, HamiltonianMap> form) : form_(std::move(form)) {}
  std::variant<Scalar, Poly, HamiltonianMap> form_;
};

/// Any bilinear operation, for probing non-brackets.
using BracketFn = std::function<PolyMat(const PolyMat&, const PolyMat&)>;

PolyMat bracket_eval(const Bracket& b, const PolyMat& x, const PolyMat& y);

/// {a, bc} - b{a, c} - {a, b}c
PolyMat biderivation_defect(const BracketFn& br, const PolyMat& a, const PolyMat& b, const PolyMat& c);
PolyMat biderivation_defect(const Bracket& br, const PolyMat& a, const PolyMat& b, const PolyMat& c);

/// {{a,b},c} + {{b,c},a} + {{c,a},b}
PolyMat jacobiator(const BracketFn& br, const PolyMat& a, const PolyMat& b, const PolyMat& c);
PolyMat jacobiator(const Bracket& br, const PolyMat& a, const PolyMat& b, const PolyMat& c);

struct HamiltonianDefects {
  double h1 = 0.0;  ///< module map: f(z a) - z f(a)
  double h2 = 0.0;  ///< [f(a), b] - [a, f(b)]
  double h3 = 0.0;  ///< [[f^2(a), b], c] + cyclic
};

/// [f(a), b] - [a, f(b)] for one pair.
PolyMat h2_defect(const HamiltonianMap& f, const PolyMat& a, const PolyMat& b);
/// [[f^2(a), b], c] + [[f^2(b), c], a] + [[f^2(c), a], b] for one triple.
PolyMat h3_defect(const HamiltonianMap& f, const PolyMat& a, const PolyMat& b, const PolyMat& c);

/// Max defects over basis tuples. A defect that cannot be formed under the degree cap is +inf.
HamiltonianDefects hamiltonian_checks(const HamiltonianMap& f);

struct ClassificationResult {
  int n = 1;
  /// Dimension of the solution space of H2 among traceless-valued linear maps.
  int space_dim = 0;
  /// Solution of unit norm in coordinates over the traceless basis {E_ab (a != b), E_aa - E_nn}
  /// (zero map when space_dim == 0).
  HamiltonianMap generator;
  /// Max Jacobiator of {a,b} = [f(a),b] over basis triples.
  double jacobi_residual = 0.0;
  double h3_residual = 0.0;
  /// generator = k * traceless_part coefficient-wise.
  Scalar k{};
  double proportionality_deviation = 0.0;
};

/// Solves H2 over all linear maps M_n -> traceless matrices. Throws ClassificationMismatch for n >= 2 if
/// the solution space is not spanned by traceless_part.
ClassificationResult classify_matrix_brackets(int n, double tol = kDefaultTol);

/// Reads lambda off f(E_12) and verifies f = lambda * traceless_part on the whole table.
/// Throws NotModuleMap, NotAntisymmetric or Inconsistent.
Poly classify_bundle_bracket(const HamiltonianMap& f, double tol = kDefaultTol);

struct Nondegeneracy {
  bool nondegenerate = false;
  /// Dimension of the span of the Hamiltonian derivations (matrix model).
  int span_dim = 0;
  int der_dim = 0;
  /// A derivation outside Z(A) * ham(A), when degenerate.
  std::optional<Derivation> witness;
};

Nondegeneracy is_nondegenerate(const Bracket& b, const Model& model, double tol = kDefaultTol);

/// {z, [a, b]}; throws NotCentral if z does not commute with the basis sections.
PolyMat center_comm_check(const Bracket& b, const PolyMat& z, const PolyMat& a, const PolyMat& c,
                          double tol = kDefaultTol);

struct ProjectorBlock {
  double identity_defect = 0.0;  ///< |{a,p}(1-p) - p{a,p}|
  double block_leak = 0.0;       ///< |p{a,p}p| + |(1-p){a,p}(1-p)|
};

/// Throws NotIdempotent if p^2 != p.
ProjectorBlock projector_block_check(const Bracket& b, const PolyMat& p, const PolyMat& a, double tol = kDefaultTol);

}  // namespace ncpoisson
