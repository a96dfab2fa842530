#include "ncpoisson/poly.hpp"

#include <string>

namespace ncpoisson {

namespace {

void require_same_ring(const Poly& a, const Poly& b) {
  if (!a.same_ring(b)) {
    throw Error(ErrorCode::DimensionMismatch,
                "polynomials from different rings (vars " + std::to_string(a.num_vars()) + "/" +
                    std::to_string(b.num_vars()) + ", cap " + std::to_string(a.degree_cap()) + "/" +
                    std::to_string(b.degree_cap()) + ")");
  }
}

}  // namespace

std::vector<Exponent> monomials_up_to(int num_vars, int max_degree) {
  std::vector<Exponent> out;
  if (num_vars == 0 || max_degree < 0) {
    if (max_degree >= 0) out.push_back(Exponent{});
    return out;
  }
  for (int d = 0; d <= max_degree; ++d) {
    if (num_vars == 1) {
      out.push_back(Exponent{d, 0});
    } else {
      for (int a = d; a >= 0; --a) out.push_back(Exponent{a, d - a});
    }
  }
  return out;
}

Poly::Poly(int num_vars, int degree_cap) : num_vars_(num_vars), degree_cap_(degree_cap) {
  if (num_vars < 0 || num_vars > kMaxVars) {
    throw Error(ErrorCode::InvalidArgument, "num_vars must be 0, 1 or 2");
  }
  if (num_vars == 0) degree_cap_ = 0;
  if (degree_cap_ < 0) throw Error(ErrorCode::InvalidArgument, "degree_cap must be >= 0");
}

Poly Poly::constant(Scalar c, int num_vars, int degree_cap) {
  return monomial(Exponent{}, c, num_vars, degree_cap);
}

Poly Poly::monomial(const Exponent& e, Scalar c, int num_vars, int degree_cap) {
  Terms t;
  t[e] = c;
  return from_terms(t, num_vars, degree_cap);
}

Poly Poly::variable(int index, int num_vars, int degree_cap) {
  if (index < 0 || index >= num_vars) throw Error(ErrorCode::IndexOutOfRange, "variable index");
  Exponent e{};
  e[index] = 1;
  return monomial(e, 1.0, num_vars, degree_cap);
}

Poly Poly::from_terms(const Terms& terms, int num_vars, int degree_cap) {
  Poly p(num_vars, degree_cap);
  for (const auto& [e, c] : terms) {
    if (!is_finite(c)) throw Error(ErrorCode::NonFinite, "polynomial coefficient");
    for (int v = num_vars; v < kMaxVars; ++v) {
      if (e[v] != 0) throw Error(ErrorCode::DimensionMismatch, "exponent uses an absent variable");
    }
    for (int v = 0; v < kMaxVars; ++v) {
      if (e[v] < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    }
    if (c != Scalar{}) p.terms_[e] += c;
  }
  p.check_cap();
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

Scalar Poly::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar{} : it->second;
}

double Poly::max_abs() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

void Poly::prune(double scale) {
  const double floor = kPruneRel * scale;
  std::erase_if(terms_, [floor](const auto& kv) { return std::abs(kv.second) <= floor; });
}

void Poly::check_cap() const {
  if (num_vars_ == 0) return;
  for (const auto& [e, c] : terms_) {
    if (total_degree(e) > degree_cap_) {
      throw Error(ErrorCode::DegreeOverflow, "term of degree " + std::to_string(total_degree(e)) +
                                                 " exceeds cap " + std::to_string(degree_cap_));
    }
  }
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Poly& Poly::operator+=(const Poly& other) {
  require_same_ring(*this, other);
  const double scale = std::max(max_abs(), other.max_abs());
  for (const auto& [e, c] : other.terms_) terms_[e] += c;
  prune(scale);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  require_same_ring(*this, other);
  const double scale = std::max(max_abs(), other.max_abs());
  for (const auto& [e, c] : other.terms_) terms_[e] -= c;
  prune(scale);
  return *this;
}

Poly& Poly::operator*=(Scalar s) {
  if (!is_finite(s)) throw Error(ErrorCode::NonFinite, "scalar factor");
  if (s == Scalar{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  Poly out(a.num_vars(), a.degree_cap());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e{ea[0] + eb[0], ea[1] + eb[1]};
      out.terms_[e] += ca * cb;
    }
  }
  out.prune(a.max_abs() * b.max_abs());
  out.check_cap();
  return out;
}

Poly Poly::derivative(int var) const {
  if (var < 0 || var >= num_vars_) throw Error(ErrorCode::IndexOutOfRange, "derivative variable");
  Poly out(num_vars_, degree_cap_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    out.terms_[d] += c * static_cast<double>(e[var]);
  }
  return out;
}

Scalar Poly::evaluate(std::span<const Scalar> x) const {
  if (static_cast<int>(x.size()) != num_vars_) {
    throw Error(ErrorCode::DimensionMismatch, "evaluation point has wrong number of coordinates");
  }
  Scalar sum{};
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (int v = 0; v < num_vars_; ++v) term *= std::pow(x[v], e[v]);
    sum += term;
  }
  return sum;
}

Poly Poly::substitute(int var, Scalar value) const {
  if (var < 0 || var >= num_vars_) throw Error(ErrorCode::IndexOutOfRange, "substitution variable");
  Poly out(num_vars_ - 1, degree_cap_);
  for (const auto& [e, c] : terms_) {
    Exponent r{};
    int k = 0;
    for (int v = 0; v < num_vars_; ++v) {
      if (v != var) r[k++] = e[v];
    }
    out.terms_[r] += c * std::pow(value, e[var]);
  }
  out.prune(max_abs() * std::max(1.0, std::pow(std::abs(value), degree_cap_)));
  return out;
}

Poly Poly::with_cap(int degree_cap) const {
  Poly out = *this;
  out.degree_cap_ = num_vars_ == 0 ? 0 : degree_cap;
  out.check_cap();
  return out;
}

Poly Poly::embed(int num_vars, int degree_cap) const {
  if (num_vars < num_vars_) throw Error(ErrorCode::DimensionMismatch, "cannot embed into fewer variables");
  return from_terms(terms_, num_vars, degree_cap);
}

double distance(const Poly& a, const Poly& b) {
  require_same_ring(a, b);
  // Coefficientwise, without pruning, so residuals below the prune floor stay visible.
  double worst = 0.0;
  for (const auto& [e, c] : a.terms()) worst = std::max(worst, std::abs(c - b.coeff(e)));
  for (const auto& [e, c] : b.terms()) {
    if (!a.terms().count(e)) worst = std::max(worst, std::abs(c));
  }
  return worst;
}

}  // namespace ncpoisson
