#pragma once

#include <cstdint>
#include <random>

#include "ncpoisson/polymat.hpp"

namespace ncpoisson {

/// Seeded source for every randomized check. The engine is std::mt19937_64, whose output
/// sequence the standard fixes; conversions to doubles are done here rather than through
/// std distributions so streams agree across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) from the top 53 bits.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// Uniform integer in [0, bound).
  int below(int bound) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound)); }
  /// Independent child stream.
  Rng fork() { return Rng(engine_() ^ 0x9E3779B97F4A7C15ULL); }

 private:
  std::mt19937_64 engine_;
};

/// Real and imaginary parts uniform in [-1, 1).
Scalar random_scalar(Rng& rng);
MatC random_matrix(Rng& rng, int n);
/// Dense random polynomial of total degree <= max_degree.
Poly random_poly(Rng& rng, int num_vars, int degree_cap, int max_degree);
/// Random section with entries of degree <= max_degree.
PolyMat random_section(Rng& rng, const Model& model, int max_degree);
Point random_point(Rng& rng, int num_vars);

}  // namespace ncpoisson
