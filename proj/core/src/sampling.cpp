#include "ncpoisson/sampling.hpp"

namespace ncpoisson {

Scalar random_scalar(Rng& rng) {
  const double re = rng.uniform(-1.0, 1.0);
  const double im = rng.uniform(-1.0, 1.0);
  return {re, im};
}

MatC random_matrix(Rng& rng, int n) {
  MatC m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = random_scalar(rng);
  }
  return m;
}

Poly random_poly(Rng& rng, int num_vars, int degree_cap, int max_degree) {
  Poly::Terms terms;
  const int cap = num_vars == 0 ? 0 : degree_cap;
  for (const auto& e : monomials_up_to(num_vars, std::min(max_degree, cap))) terms[e] = random_scalar(rng);
  return Poly::from_terms(terms, num_vars, degree_cap);
}

PolyMat random_section(Rng& rng, const Model& model, int max_degree) {
  PolyMat out(model);
  for (int i = 0; i < model.n; ++i) {
    for (int j = 0; j < model.n; ++j) out.set(i, j, random_poly(rng, model.vars, model.cap, max_degree));
  }
  return out;
}

Point random_point(Rng& rng, int num_vars) {
  Point x;
  for (int v = 0; v < num_vars; ++v) x.push_back(random_scalar(rng));
  return x;
}

}  // namespace ncpoisson
