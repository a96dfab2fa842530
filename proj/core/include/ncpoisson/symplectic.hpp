#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ncpoisson/poisson.hpp"

namespace ncpoisson {

/// Z(A)-bilinear antisymmetric map Der(A) x Der(A) -> A.
class TwoForm {
 public:
  using Evaluator = std::function<PolyMat(const Derivation&, const Derivation&)>;

  TwoForm(Model model, Evaluator evaluator, std::optional<Bracket> source = std::nullopt)
      : model_(model), evaluator_(std::move(evaluator)), source_(std::move(source)) {}

  static TwoForm zero(const Model& model);

  PolyMat operator()(const Derivation& x, const Derivation& y) const { return evaluator_(x, y); }
  const Model& model() const { return model_; }
  const std::optional<Bracket>& source() const { return source_; }

 private:
  Model model_;
  Evaluator evaluator_;
  std::optional<Bracket> source_;
};

/// Linear map Der(A) -> A.
class OneForm {
 public:
  using Evaluator = std::function<PolyMat(const Derivation&)>;

  explicit OneForm(Evaluator evaluator) : evaluator_(std::move(evaluator)) {}
  PolyMat operator()(const Derivation& y) const { return evaluator_(y); }

 private:
  Evaluator evaluator_;
};

/// x with ham(x) = D, solved in the least-squares sense on M_n. Throws NotInner if no such x exists.
PolyMat hamiltonian_preimage(const Bracket& b, const Derivation& d, double tol = kDefaultTol);

/// omega(X, Y) = sum u_i v_j {x_i, y_j} for X = sum u_i ham(x_i), Y = sum v_j ham(y_j).
/// Each argument is resolved to a single Hamiltonian. Throws Degenerate if b is degenerate on M_n.
TwoForm form_from_bracket(const Bracket& b, int n, double tol = kDefaultTol);

/// A Hamiltonian representation sum_i u_i * ham(x_i).
using HamRepresentation = std::vector<std::pair<Scalar, PolyMat>>;

/// sum_{i,j} u_i v_j {x_i, y_j} evaluated directly on explicit representations.
PolyMat form_on_representations(const Bracket& b, const HamRepresentation& x, const HamRepresentation& y);

/// The derivation sum_i u_i ham(x_i).
Derivation derivation_of(const Bracket& b, const HamRepresentation& rep);

/// Y -> omega(X, Y)
OneForm interior(const TwoForm& omega, const Derivation& x);

/// Y -> Y(a)
OneForm exact_differential(const PolyMat& a);

/// Koszul formula:
/// X w(Y,Z) - Y w(X,Z) + Z w(X,Y) - w([X,Y],Z) + w([X,Z],Y) - w([Y,Z],X)
PolyMat exterior_derivative(const TwoForm& omega, const Derivation& x, const Derivation& y, const Derivation& z);

struct FormNondegeneracy {
  bool nondegenerate = false;
  /// Worst residual of i_X w = -dE_ij over the basis.
  double max_residual = 0.0;
  /// Dimension of the kernel of X -> i_X w on Der(M_n).
  int kernel_dim = 0;
};

FormNondegeneracy is_nondegenerate_form(const TwoForm& omega, int n, double tol = kDefaultTol);

}  // namespace ncpoisson
