#include <benchmark/benchmark.h>

#include "ncpoisson/ncpoisson.hpp"

namespace {

using namespace ncpoisson;

void BM_DerivationSpace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(derivation_space(n).dim);
}
BENCHMARK(BM_DerivationSpace)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ClassifyMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify_matrix_brackets(n).space_dim);
}
BENCHMARK(BM_ClassifyMatrix)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_ClassifyBundle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  const Model model = Model::bundle(n, 1, 6);
  const HamiltonianMap f = HamiltonianMap::scalar_multiple(model, 3, random_poly(rng, 1, 6, 3));
  for (auto _ : state) benchmark::DoNotOptimize(classify_bundle_bracket(f).max_abs());
}
BENCHMARK(BM_ClassifyBundle)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_SectionProduct(benchmark::State& state) {
  const int vars = static_cast<int>(state.range(0));
  Rng rng(2);
  const Model model = Model::bundle(3, vars, 8);
  const PolyMat a = random_section(rng, model, 4);
  const PolyMat b = random_section(rng, model, 4);
  for (auto _ : state) benchmark::DoNotOptimize((a * b).max_abs());
}
BENCHMARK(BM_SectionProduct)->DenseRange(1, 2);

void BM_CovariantCurvature(benchmark::State& state) {
  Rng rng(3);
  const Model model = Model::bundle(2, 2, 6);
  const Connection conn({random_section(rng, model, 1), random_section(rng, model, 1)});
  const VectorField x({random_poly(rng, 2, 6, 1), random_poly(rng, 2, 6, 1)});
  const VectorField y({random_poly(rng, 2, 6, 1), random_poly(rng, 2, 6, 1)});
  for (auto _ : state) benchmark::DoNotOptimize(curvature_defect(conn, x, y).max_residual);
}
BENCHMARK(BM_CovariantCurvature);

void BM_QuotientManifold(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_quotient_manifold_conditions(3, m, 4).all());
}
BENCHMARK(BM_QuotientManifold)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_SymplecticRoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(4);
  const Bracket b = Bracket::scalar(2.0);
  const TwoForm omega = form_from_bracket(b, n);
  const PolyMat a = PolyMat::from_matrix(random_matrix(rng, n));
  const PolyMat c = PolyMat::from_matrix(random_matrix(rng, n));
  for (auto _ : state) benchmark::DoNotOptimize(omega(b.ham(a), b.ham(c)).max_abs());
}
BENCHMARK(BM_SymplecticRoundTrip)->DenseRange(2, 3);

}  // namespace
BENCHMARK_MAIN();
