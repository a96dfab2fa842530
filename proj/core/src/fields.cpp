#include "ncpoisson/fields.hpp"

namespace ncpoisson {

VectorField::VectorField(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty() || static_cast<int>(coeffs_.size()) > kMaxVars) {
    throw Error(ErrorCode::InvalidArgument, "vector field needs 1 or 2 coefficients");
  }
  cap_ = coeffs_.front().degree_cap();
  for (const auto& c : coeffs_) {
    if (c.num_vars() != num_vars() || c.degree_cap() != cap_) {
      throw Error(ErrorCode::DimensionMismatch, "vector field coefficients must live on the base ring");
    }
  }
}

VectorField VectorField::zero(int num_vars, int degree_cap) {
  return VectorField(std::vector<Poly>(num_vars, Poly(num_vars, degree_cap)));
}

VectorField VectorField::coordinate(int index, int num_vars, int degree_cap) {
  std::vector<Poly> c(num_vars, Poly(num_vars, degree_cap));
  c.at(index) = Poly::constant(1.0, num_vars, degree_cap);
  return VectorField(std::move(c));
}

bool VectorField::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Poly& p) { return p.is_zero(); });
}

Poly VectorField::apply(const Poly& p) const {
  if (p.num_vars() != num_vars()) throw Error(ErrorCode::DimensionMismatch, "vector field on wrong base");
  Poly out(p.num_vars(), p.degree_cap());
  for (int i = 0; i < num_vars(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const Poly d = p.derivative(i);
    if (!d.is_zero()) out += coeffs_[i] * d;
  }
  return out;
}

PolyMat VectorField::apply(const PolyMat& section) const {
  return section.map_entries([this](const Poly& p) { return apply(p); });
}

VectorField VectorField::operator+(const VectorField& other) const {
  std::vector<Poly> c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coeffs_.at(i);
  return VectorField(std::move(c));
}

VectorField VectorField::operator-(const VectorField& other) const {
  std::vector<Poly> c = coeffs_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.coeffs_.at(i);
  return VectorField(std::move(c));
}

VectorField VectorField::scaled(const Poly& p) const {
  std::vector<Poly> c = coeffs_;
  for (auto& g : c) g = p * g;
  return VectorField(std::move(c));
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  if (x.num_vars() != y.num_vars()) throw Error(ErrorCode::DimensionMismatch, "vector fields on different bases");
  std::vector<Poly> c;
  for (int j = 0; j < x.num_vars(); ++j) c.push_back(x.apply(y.coeff(j)) - y.apply(x.coeff(j)));
  return VectorField(std::move(c));
}

double distance(const VectorField& a, const VectorField& b) {
  double d = 0.0;
  for (int i = 0; i < a.num_vars(); ++i) d = std::max(d, distance(a.coeff(i), b.coeff(i)));
  return d;
}

Connection::Connection(std::vector<PolyMat> forms) : forms_(std::move(forms)) {
  if (forms_.empty()) throw Error(ErrorCode::InvalidArgument, "connection needs one form per base variable");
  model_ = forms_.front().model();
  if (model_.vars != static_cast<int>(forms_.size())) {
    throw Error(ErrorCode::DimensionMismatch, "connection needs exactly one form per base variable");
  }
  for (const auto& f : forms_) {
    if (!(f.model() == model_)) throw Error(ErrorCode::DimensionMismatch, "connection forms disagree on model");
  }
}

Connection Connection::flat(const Model& model) {
  if (model.vars < 1) throw Error(ErrorCode::DimensionMismatch, "connections need a polynomial base");
  return Connection(std::vector<PolyMat>(model.vars, PolyMat(model)));
}

PolyMat Connection::contract(const VectorField& x) const {
  if (x.num_vars() != model_.vars) throw Error(ErrorCode::DimensionMismatch, "vector field on wrong base");
  PolyMat out(model_);
  for (int i = 0; i < model_.vars; ++i) {
    if (!x.coeff(i).is_zero()) out += x.coeff(i) * forms_[i];
  }
  return out;
}

}  // namespace ncpoisson
