#include "ncpoisson_tools/commands.hpp"

namespace ncpoisson::tools {

const std::map<std::string, std::string>& anchor_index() {
  static const std::map<std::string, std::string> index{
      {"commutators-generate", "Every matrix unit of M_n (n >= 2) is a commutator or a product of two commutators."},
      {"derivations-are-inner", "Every derivation of M_n is inner; Der(M_n) has dimension n^2 - 1."},
      {"center-invariant", "Derivations map the center into the center."},
      {"matrix-bracket-classification", "Every Poisson bracket on M_n is k[a,b] for a constant k."},
      {"projector-hamiltonians", "On projectors the Hamiltonian map is k * p with one shared k; {a,p} swaps Im p and Im(1-p)."},
      {"hamiltonian-conditions", "Poisson brackets correspond to maps f: A -> A/Z(A) satisfying H1 (module map), H2 (symmetry), H3 (Jacobi)."},
      {"center-brackets-commutators", "{Z(A), Comm(A)} = 0."},
      {"bundle-bracket-classification", "Every Poisson bracket on End(E) with fiber dimension >= 2 is lambda[Phi,Psi]."},
      {"bundle-brackets-degenerate", "Every Poisson bracket on End(E) with fiber dimension >= 2 is degenerate."},
      {"point-ideal-locally-proper", "Sections vanishing at a point form a locally proper Poisson ideal."},
      {"point-ideal-submanifold", "Derivations of End(E_x) lift to derivations of End(E) preserving the point ideal."},
      {"degeneracy-criterion", "A locally proper Poisson ideal forces the bracket to be degenerate."},
      {"zero-set", "The 0-set of an ideal is the common zero locus of its sections."},
      {"covariant-derivation", "D_X(Phi) = X(Phi) + [A(X), Phi] is a derivation with rho(D_X) = X."},
      {"curvature-defect", "[D_X, D_Y] - D_[X,Y] = ad(F(X,Y)); zero for flat connections."},
      {"derivation-decomposition", "Every represented derivation splits as ad(Phi) + D_X."},
      {"quotient-manifold-center", "The center of End(E) satisfies the quotient-manifold conditions q1-q3."},
      {"symplectic-from-bracket", "A nondegenerate bracket defines a symplectic form with omega(ham a, ham b) = {a,b}."},
      {"hamiltonian-interior", "i_{ham a} omega = -da."},
      {"closed-form-jacobi", "d omega on Hamiltonian triples equals the Jacobiator."},
      {"plumbing", "Artifact plumbing with no mathematical statement attached."},
  };
  return index;
}

}  // namespace ncpoisson::tools
