#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "ncpoisson/poisson.hpp"

namespace ncpoisson {

/// Two-sided ideal of the bundle algebra described by its zero set.
class Ideal {
 public:
  struct Points {
    std::vector<Point> points;
  };
  struct Slice {
    int var_index = 0;
    Scalar value{};
  };
  struct Unit {};

  /// Sections vanishing at every point of S (S nonempty, distinct points).
  static Ideal points(std::vector<Point> s);
  /// Sections vanishing on {t_var = value}; base must have two variables.
  static Ideal slice(int var_index, Scalar value);
  static Ideal unit() { return Ideal(Unit{}); }

  const std::variant<Points, Slice, Unit>& data() const { return data_; }
  bool is_unit() const { return std::holds_alternative<Unit>(data_); }

 private:
  explicit Ideal(std::variant<Points, Slice, Unit> d) : data_(std::move(d)) {}
  std::variant<Points, Slice, Unit> data_;
};

/// The defining zero-set data; empty for the unit ideal.
struct ZeroSet {
  std::vector<Point> points;
  std::optional<Ideal::Slice> slice;

  bool empty() const { return points.empty() && !slice; }
};

bool contains(const Ideal& ideal, const PolyMat& section, double tol = kDefaultTol);

ZeroSet zero_set(const Ideal& ideal);

/// Polynomial vanishing on the zero set with a simple zero at `at` (a stored point) in direction t_1.
/// Points: (t_1 - at_1) * prod of linear factors through the other points. Slice: t_var - value.
Poly vanishing_polynomial(const Ideal& ideal, const Model& model, const Point& at);

/// Recomputes the zero set from the vanishing polynomial and compares with the stored data.
/// One variable: roots of the defining polynomial. Returns the max mismatch.
double zero_set_consistency(const Ideal& ideal, const Model& model);

/// Samples members f * Psi and random Psi', checks {member, Psi'} stays in the ideal.
bool is_poisson_ideal(const Bracket& b, const Ideal& ideal, const Model& model, int samples,
                      std::uint64_t seed, double tol = kDefaultTol);

/// Worst evaluation of sampled members and their brackets at the zero set.
double poisson_ideal_max_residual(const Bracket& b, const Ideal& ideal, const Model& model, int samples,
                                  std::uint64_t seed);

struct LocallyProperWitness {
  Derivation derivation;
  PolyMat member;
  Point at;
  /// |D(member)(at)|
  double escape = 0.0;
};

/// A covariant derivation that does not preserve the ideal. Throws NoWitness for the unit ideal.
LocallyProperWitness locally_proper_witness(const Ideal& ideal, const Connection& conn, double tol = kDefaultTol);

/// Evaluation at x0: End(E) -> End(E_x0).
class PointQuotient {
 public:
  explicit PointQuotient(Point x0) : x0_(std::move(x0)) {}
  MatC operator()(const PolyMat& section) const { return section.evaluate(x0_); }
  const Point& point() const { return x0_; }

 private:
  Point x0_;
};

PointQuotient quotient_at_point(Point x0);

/// Lifts a derivation of M_n to the bundle model as Inner(constant m0). Throws NotInner.
Derivation lift_derivation(const Model& bundle, const Point& x0, const Derivation& d, double tol = kDefaultTol);

/// |delta_x0(U(section)) - d(delta_x0(section))|
double lift_square_defect(const Derivation& lifted, const Derivation& d, const Point& x0, const PolyMat& section);

/// Substitutes t_var = value in every entry.
PolyMat restrict_to_slice(const PolyMat& section, int var_index, Scalar value);

}  // namespace ncpoisson
