#include "ncpoisson/polymat.hpp"

#include <set>
#include <string>

namespace ncpoisson {

PolyMat::PolyMat(const Model& model) : model_(model) {
  if (model.n < 1) throw Error(ErrorCode::InvalidArgument, "matrix dimension must be >= 1");
  if (model.vars == 0) model_.cap = 0;
  entries_.assign(static_cast<std::size_t>(model.n) * model.n, Poly(model_.vars, model_.cap));
}

PolyMat PolyMat::identity(const Model& model) {
  PolyMat m(model);
  for (int i = 0; i < model.n; ++i) m.set(i, i, Poly::constant(1.0, m.num_vars(), m.degree_cap()));
  return m;
}

PolyMat PolyMat::from_matrix(const MatC& m, int vars, int cap) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
  PolyMat out(Model{static_cast<int>(m.rows()), vars, cap});
  for (int i = 0; i < out.n(); ++i) {
    for (int j = 0; j < out.n(); ++j) {
      out.set(i, j, Poly::constant(m(i, j), out.num_vars(), out.degree_cap()));
    }
  }
  return out;
}

PolyMat PolyMat::scalar_section(const Poly& p, int n) {
  PolyMat out(Model{n, p.num_vars(), p.degree_cap()});
  for (int i = 0; i < n; ++i) out.set(i, i, p);
  return out;
}

PolyMat PolyMat::unit_section(const Model& model, int i, int j, const Poly& p) {
  PolyMat out(model);
  out.set(i, j, p);
  return out;
}

std::size_t PolyMat::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= model_.n || j >= model_.n) {
    throw Error(ErrorCode::IndexOutOfRange, "matrix index (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return static_cast<std::size_t>(i) * model_.n + j;
}

void PolyMat::set(int i, int j, Poly p) {
  if (p.num_vars() != model_.vars || (model_.vars != 0 && p.degree_cap() != model_.cap)) {
    throw Error(ErrorCode::DimensionMismatch, "entry ring does not match matrix ring");
  }
  entries_[index(i, j)] = std::move(p);
}

void PolyMat::require_compatible(const PolyMat& other) const {
  if (!(model_ == other.model_)) {
    throw Error(ErrorCode::DimensionMismatch,
                "sections from different models (n " + std::to_string(model_.n) + "/" +
                    std::to_string(other.model_.n) + ", vars " + std::to_string(model_.vars) + "/" +
                    std::to_string(other.model_.vars) + ")");
  }
}

int PolyMat::degree() const {
  int d = -1;
  for (const auto& p : entries_) d = std::max(d, p.degree());
  return d;
}

double PolyMat::max_abs() const {
  double m = 0.0;
  for (const auto& p : entries_) m = std::max(m, p.max_abs());
  return m;
}

bool PolyMat::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Poly& p) { return p.is_zero(); });
}

Poly PolyMat::trace() const {
  Poly t(model_.vars, model_.cap);
  for (int i = 0; i < model_.n; ++i) t += (*this)(i, i);
  return t;
}

MatC PolyMat::coefficient(const Exponent& e) const {
  MatC m(model_.n, model_.n);
  for (int i = 0; i < model_.n; ++i) {
    for (int j = 0; j < model_.n; ++j) m(i, j) = (*this)(i, j).coeff(e);
  }
  return m;
}

std::vector<Exponent> PolyMat::support() const {
  std::set<Exponent> s;
  for (const auto& p : entries_) {
    for (const auto& [e, c] : p.terms()) s.insert(e);
  }
  return {s.begin(), s.end()};
}

PolyMat PolyMat::operator-() const {
  PolyMat out = *this;
  for (auto& p : out.entries_) p = -p;
  return out;
}

PolyMat& PolyMat::operator+=(const PolyMat& other) {
  require_compatible(other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

PolyMat& PolyMat::operator-=(const PolyMat& other) {
  require_compatible(other);
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

PolyMat operator*(const PolyMat& a, const PolyMat& b) {
  a.require_compatible(b);
  const int n = a.n();
  PolyMat out(a.model());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Poly sum(a.num_vars(), a.degree_cap());
      for (int k = 0; k < n; ++k) {
        const Poly& x = a(i, k);
        const Poly& y = b(k, j);
        if (x.is_zero() || y.is_zero()) continue;
        sum += x * y;
      }
      out.entries_[out.index(i, j)] = std::move(sum);
    }
  }
  return out;
}

PolyMat operator*(PolyMat a, Scalar s) {
  for (auto& p : a.entries_) p *= s;
  return a;
}

PolyMat operator*(const Poly& p, const PolyMat& a) {
  if (p.num_vars() != a.num_vars() || (a.num_vars() != 0 && p.degree_cap() != a.degree_cap())) {
    throw Error(ErrorCode::DimensionMismatch, "central factor from a different ring");
  }
  PolyMat out = a;
  for (auto& e : out.entries_) {
    if (!e.is_zero()) e = p * e;
  }
  return out;
}

PolyMat PolyMat::map_entries(const std::function<Poly(const Poly&)>& f) const {
  PolyMat out = *this;
  for (auto& e : out.entries_) e = f(e);
  return out;
}

MatC PolyMat::evaluate(std::span<const Scalar> x) const {
  MatC m(model_.n, model_.n);
  for (int i = 0; i < model_.n; ++i) {
    for (int j = 0; j < model_.n; ++j) m(i, j) = (*this)(i, j).evaluate(x);
  }
  return m;
}

MatC PolyMat::constant_matrix() const {
  if (degree() > 0) throw Error(ErrorCode::DimensionMismatch, "section is not constant");
  return coefficient(Exponent{});
}

PolyMat PolyMat::embed(int vars, int cap) const {
  PolyMat out(Model{model_.n, vars, cap});
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].embed(vars, cap);
  return out;
}

double distance(const PolyMat& a, const PolyMat& b) {
  if (!(a.model() == b.model())) throw Error(ErrorCode::DimensionMismatch, "sections live on different models");
  double worst = 0.0;
  for (int i = 0; i < a.n(); ++i) {
    for (int j = 0; j < a.n(); ++j) worst = std::max(worst, distance(a(i, j), b(i, j)));
  }
  return worst;
}

}  // namespace ncpoisson
