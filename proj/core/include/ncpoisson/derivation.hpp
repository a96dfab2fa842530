#pragma once

#include <memory>
#include <vector>

#include "ncpoisson/fields.hpp"
#include "ncpoisson/polymat.hpp"

namespace ncpoisson {

/// A linear operator on sections satisfying (or, for raw tables, tested against) the Leibniz rule.
///
/// Variants:
///  - Inner(g):          a -> [g, a]
///  - Covariant(A, X):   a -> X(a) + [A(X), a]
///  - Table(n, M):       M acts on row-major E_ij coordinates of M_n (matrix model only)
///  - Sum(D_1..D_k)
///  - Scaled(z, D):      a -> z * D(a) for central z
///  - Commutator(D, E):  a -> D(E(a)) - E(D(a))
///
/// Values are immutable; copies share structure.
class Derivation {
 public:
  enum class Kind { Inner, Covariant, Table, Sum, Scaled, Commutator };

  static Derivation inner(PolyMat generator);
  static Derivation covariant(Connection conn, VectorField field);
  /// Table derivation; rejects matrices whose Leibniz defect on seeded pairs exceeds tol.
  static Derivation table(int n, MatC matrix, double tol = kDefaultTol);
  /// Table without the Leibniz validation, for probing linear maps that are not derivations.
  static Derivation raw_table(int n, MatC matrix);
  static Derivation sum(std::vector<Derivation> parts);
  static Derivation scaled(Poly factor, Derivation d);
  static Derivation scaled(Scalar factor, Derivation d);
  static Derivation commutator(Derivation a, Derivation b);
  static Derivation zero(const Model& model) { return inner(PolyMat(model)); }

  Kind kind() const;
  const Model& model() const;

  PolyMat apply(const PolyMat& a) const;

  /// n^2 x n^2 matrix of the operator on M_n (matrix model only).
  MatC to_table() const;

  // Variant accessors; throw InvalidArgument on the wrong kind.
  const PolyMat& generator() const;
  const Connection& connection() const;
  const VectorField& field() const;
  const MatC& table_matrix() const;
  const std::vector<Derivation>& parts() const;

  Derivation operator+(const Derivation& other) const { return sum({*this, other}); }
  Derivation operator-(const Derivation& other) const { return sum({*this, scaled(-1.0, other)}); }

  struct Node;

 private:
  explicit Derivation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// D(ab) - D(a) b - a D(b)
PolyMat leibniz_defect(const Derivation& d, const PolyMat& a, const PolyMat& b);

/// Max Leibniz defect over seeded random pairs of sections of degree <= max_degree.
double sampled_leibniz_defect(const Derivation& d, std::uint64_t seed, int pairs, int max_degree = 1);

/// Derivation space of M_n: the orthonormal null-space basis of the stacked Leibniz constraints.
struct DerivationSpace {
  int n = 1;
  std::vector<Derivation> basis;
  int dim = 0;
};

DerivationSpace derivation_space(int n, double tol = kDefaultTol);

/// Traceless g with ad(g) = D on all basis sections.
/// Throws CenterNotKilled if D moves the center, NotInner if the residual exceeds tol.
PolyMat solve_inner_generator(const Derivation& d, double tol = kDefaultTol);

/// Like solve_inner_generator but also returns the least-squares residual.
struct InnerSolve {
  PolyMat generator;
  double residual = 0.0;
};
InnerSolve solve_inner_generator_with_residual(const Derivation& d, double tol = kDefaultTol);

/// {monomial * 1}; {1} for the matrix model.
std::vector<PolyMat> center_basis(int n, int num_vars, int degree_cap);

/// Dimension of the commutant of all constant E_ij sections inside the capped model,
/// computed as a null space; should equal the number of monomials.
struct Commutant {
  int dim = 0;
  /// Max distance of a commutant basis vector from the span of center_basis.
  double containment_residual = 0.0;
};
Commutant commutant_of_units(const Model& model, double tol = kDefaultTol);

/// Operator commutator [D1, D2].
Derivation der_bracket(const Derivation& a, const Derivation& b);

/// Max over basis sections E_ij (and, for bundle models, t_k * E_ij) of |D1(s) - D2(s)|.
double basis_distance(const Derivation& a, const Derivation& b);

}  // namespace ncpoisson
