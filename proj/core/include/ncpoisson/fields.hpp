#pragma once

#include <vector>

#include "ncpoisson/polymat.hpp"

namespace ncpoisson {

/// Vector field sum_i g_i d/dt_i on the base.
class VectorField {
 public:
  explicit VectorField(std::vector<Poly> coeffs);

  static VectorField zero(int num_vars, int degree_cap);
  /// d/dt_index
  static VectorField coordinate(int index, int num_vars, int degree_cap);

  int num_vars() const { return static_cast<int>(coeffs_.size()); }
  int degree_cap() const { return cap_; }
  const std::vector<Poly>& coeffs() const { return coeffs_; }
  const Poly& coeff(int i) const { return coeffs_.at(i); }
  bool is_zero() const;

  Poly apply(const Poly& p) const;
  /// Entrywise action on a section.
  PolyMat apply(const PolyMat& section) const;

  VectorField operator+(const VectorField& other) const;
  VectorField operator-(const VectorField& other) const;
  VectorField scaled(const Poly& p) const;

 private:
  std::vector<Poly> coeffs_;
  int cap_ = 0;
};

/// Lie bracket [X, Y] of vector fields.
VectorField lie_bracket(const VectorField& x, const VectorField& y);
double distance(const VectorField& a, const VectorField& b);

/// Connection on the trivial bundle, given by its form matrices A_1..A_m.
class Connection {
 public:
  explicit Connection(std::vector<PolyMat> forms);
  /// A = 0 (requires vars >= 1).
  static Connection flat(const Model& model);

  const std::vector<PolyMat>& forms() const { return forms_; }
  const Model& model() const { return model_; }
  /// A(X) = sum_i g_i A_i
  PolyMat contract(const VectorField& x) const;

 private:
  std::vector<PolyMat> forms_;
  Model model_;
};

}  // namespace ncpoisson
