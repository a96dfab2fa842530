#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "ncpoisson/scalar.hpp"

namespace ncpoisson {

inline constexpr int kDefaultDegreeCap = 8;
inline constexpr int kMaxVars = 2;

/// Exponent tuple; slots at index >= num_vars are always zero.
using Exponent = std::array<int, kMaxVars>;

inline int total_degree(const Exponent& e) { return e[0] + e[1]; }

/// All exponent tuples of total degree <= max_degree, graded then lexicographic.
std::vector<Exponent> monomials_up_to(int num_vars, int max_degree);

/// Sparse complex polynomial in num_vars in {0,1,2} variables with a total-degree cap.
/// num_vars == 0 is the constant (plain matrix) model.
class Poly {
 public:
  using Terms = std::map<Exponent, Scalar>;

  explicit Poly(int num_vars = 0, int degree_cap = kDefaultDegreeCap);

  static Poly constant(Scalar c, int num_vars, int degree_cap = kDefaultDegreeCap);
  static Poly monomial(const Exponent& e, Scalar c, int num_vars, int degree_cap = kDefaultDegreeCap);
  /// The coordinate function t_index.
  static Poly variable(int index, int num_vars, int degree_cap = kDefaultDegreeCap);
  static Poly from_terms(const Terms& terms, int num_vars, int degree_cap = kDefaultDegreeCap);

  int num_vars() const { return num_vars_; }
  int degree_cap() const { return degree_cap_; }
  /// -1 for the zero polynomial.
  int degree() const;
  const Terms& terms() const { return terms_; }
  Scalar coeff(const Exponent& e) const;
  Scalar constant_term() const { return coeff(Exponent{}); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return degree() <= 0; }
  double max_abs() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(Scalar s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, Scalar s) { return a *= s; }
  friend Poly operator*(Scalar s, Poly a) { return a *= s; }
  /// Throws DegreeOverflow if a surviving product term exceeds the cap.
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly derivative(int var) const;
  Scalar evaluate(std::span<const Scalar> x) const;
  /// Substitutes t_var = value, dropping that variable.
  Poly substitute(int var, Scalar value) const;
  /// Same polynomial with a different cap; throws DegreeOverflow if it does not fit.
  Poly with_cap(int degree_cap) const;
  /// Embeds into a model with more variables (new variables unused).
  Poly embed(int num_vars, int degree_cap) const;

  bool same_ring(const Poly& other) const {
    return num_vars_ == other.num_vars_ && degree_cap_ == other.degree_cap_;
  }

 private:
  void prune(double scale);
  void check_cap() const;

  int num_vars_;
  int degree_cap_;
  Terms terms_;
};

/// Max absolute coefficient of a - b.
double distance(const Poly& a, const Poly& b);

}  // namespace ncpoisson
