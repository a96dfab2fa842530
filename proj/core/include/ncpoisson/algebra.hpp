#pragma once

#include <utility>
#include <vector>

#include "ncpoisson/polymat.hpp"

namespace ncpoisson {

/// ab - ba
PolyMat commutator(const PolyMat& a, const PolyMat& b);
MatC commutator(const MatC& a, const MatC& b);

/// Matrix unit E_ij, 1-based indices as in the usual notation.
MatC elementary(int n, int i, int j);

/// The idempotent basis P_ij = E_ij + E_jj (i != j), P_ii = E_ii, ordered row-major in (i,j).
std::vector<MatC> projector_basis(int n);

/// Ordered product of commutators [a_1,b_1][a_2,b_2]... equal to some target matrix.
struct CommWitness {
  std::vector<std::pair<MatC, MatC>> factors;

  MatC multiply_out() const;
};

/// E_ij as a product of commutators (1-based). Throws Unsupported for n = 1.
CommWitness express_in_commutators(int n, int i, int j);

/// a - (tr a / n) * 1: canonical representative of a modulo the center.
PolyMat traceless_part(const PolyMat& a);
MatC traceless_part(const MatC& a);

/// Point evaluation of a section.
MatC eval_section(const PolyMat& section, std::span<const Scalar> x);

/// Row-major coordinates of a matrix in the E_ij basis.
Eigen::VectorXcd vec(const MatC& a);
MatC unvec(const Eigen::VectorXcd& v, int n);

/// Max absolute entry.
inline double max_abs(const MatC& a) { return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff(); }

}  // namespace ncpoisson
