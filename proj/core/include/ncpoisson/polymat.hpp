#pragma once

#include <Eigen/Dense>
#include <functional>
#include <span>
#include <vector>

#include "ncpoisson/poly.hpp"

namespace ncpoisson {

/// Plain complex matrix: the degree-0 section.
using MatC = Eigen::MatrixXcd;
using Point = std::vector<Scalar>;

/// Which algebra a value lives in: M_n (vars == 0) or M_n(C[t_1..t_vars]) capped at degree cap.
struct Model {
  int n = 1;
  int vars = 0;
  int cap = 0;

  static Model matrix(int n) { return Model{n, 0, 0}; }
  static Model bundle(int n, int vars, int cap) { return Model{n, vars, cap}; }

  bool is_matrix() const { return vars == 0; }
  friend bool operator==(const Model&, const Model&) = default;
};

/// n x n matrix of polynomials sharing one ring; a section of End(E) in the bundle model.
class PolyMat {
 public:
  explicit PolyMat(const Model& model);
  PolyMat(int n, int vars, int cap) : PolyMat(Model{n, vars, cap}) {}

  static PolyMat zero(const Model& model) { return PolyMat(model); }
  static PolyMat identity(const Model& model);
  static PolyMat from_matrix(const MatC& m, int vars = 0, int cap = 0);
  /// p * 1
  static PolyMat scalar_section(const Poly& p, int n);
  /// p * E_ij (0-based indices)
  static PolyMat unit_section(const Model& model, int i, int j, const Poly& p);

  const Model& model() const { return model_; }
  int n() const { return model_.n; }
  int num_vars() const { return model_.vars; }
  int degree_cap() const { return model_.cap; }

  const Poly& operator()(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, Poly p);

  int degree() const;
  double max_abs() const;
  bool is_zero() const;
  Poly trace() const;
  /// Coefficient matrix of one monomial.
  MatC coefficient(const Exponent& e) const;
  /// Monomials that occur in some entry.
  std::vector<Exponent> support() const;

  PolyMat operator-() const;
  PolyMat& operator+=(const PolyMat& other);
  PolyMat& operator-=(const PolyMat& other);
  friend PolyMat operator+(PolyMat a, const PolyMat& b) { return a += b; }
  friend PolyMat operator-(PolyMat a, const PolyMat& b) { return a -= b; }
  friend PolyMat operator*(const PolyMat& a, const PolyMat& b);
  friend PolyMat operator*(PolyMat a, Scalar s);
  friend PolyMat operator*(Scalar s, PolyMat a) { return std::move(a) * s; }
  /// Central multiple p * a.
  friend PolyMat operator*(const Poly& p, const PolyMat& a);

  PolyMat map_entries(const std::function<Poly(const Poly&)>& f) const;
  /// Entrywise evaluation; the point evaluation homomorphism.
  MatC evaluate(std::span<const Scalar> x) const;
  /// The matrix of a degree-0 section; throws DimensionMismatch if not constant.
  MatC constant_matrix() const;
  /// Same section in another ring (more variables and/or another cap).
  PolyMat embed(int vars, int cap) const;

 private:
  std::size_t index(int i, int j) const;
  void require_compatible(const PolyMat& other) const;

  Model model_;
  std::vector<Poly> entries_;
};

/// Max absolute coefficient of a - b over all entries.
double distance(const PolyMat& a, const PolyMat& b);

}  // namespace ncpoisson
