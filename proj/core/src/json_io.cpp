#include "ncpoisson/json_io.hpp"

namespace ncpoisson::json {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidArgument, "json: " + what); }

}  // namespace

json to_json(Scalar z) { return json::array({z.real(), z.imag()}); }

Scalar scalar_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) bad("scalar must be [re, im]");
  return checked_scalar(j[0].get<double>(), j[1].get<double>());
}

json to_json(const Poly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) {
    json exps = json::array();
    for (int v = 0; v < p.num_vars(); ++v) exps.push_back(e[v]);
    out.push_back({{"exps", exps}, {"coeff", to_json(c)}});
  }
  return out;
}

Poly poly_from_json(const json& j, int num_vars, int degree_cap) {
  if (!j.is_array()) bad("poly must be a list of terms");
  Poly::Terms terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("exps") || !t.contains("coeff")) bad("term needs exps and coeff");
    const auto& exps = t.at("exps");
    if (!exps.is_array() || static_cast<int>(exps.size()) != num_vars) bad("exps length must equal vars");
    Exponent e{};
    for (int v = 0; v < num_vars; ++v) e[v] = exps[v].get<int>();
    terms[e] += scalar_from_json(t.at("coeff"));
  }
  return Poly::from_terms(terms, num_vars, degree_cap);
}

json to_json(const PolyMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return {{"n", m.n()}, {"vars", m.num_vars()}, {"entries", rows}};
}

PolyMat polymat_from_json(const json& j, int degree_cap) {
  if (!j.is_object() || !j.contains("n") || !j.contains("vars") || !j.contains("entries")) {
    bad("polymat needs n, vars, entries");
  }
  const int n = j.at("n").get<int>();
  const int vars = j.at("vars").get<int>();
  const auto& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) bad("entries must have n rows");
  PolyMat m(Model{n, vars, degree_cap});
  for (int i = 0; i < n; ++i) {
    if (!rows[i].is_array() || static_cast<int>(rows[i].size()) != n) bad("entries must be square");
    for (int k = 0; k < n; ++k) m.set(i, k, poly_from_json(rows[i][k], vars, m.degree_cap()));
  }
  return m;
}

json table_to_json(const Derivation& d) {
  const MatC t = d.kind() == Derivation::Kind::Table ? d.table_matrix() : d.to_table();
  json rows = json::array();
  for (Eigen::Index p = 0; p < t.rows(); ++p) {
    json row = json::array();
    for (Eigen::Index q = 0; q < t.cols(); ++q) row.push_back(to_json(t(p, q)));
    rows.push_back(row);
  }
  return {{"n", d.model().n}, {"matrix", rows}};
}

Derivation table_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("matrix")) bad("table needs n and matrix");
  const int n = j.at("n").get<int>();
  const auto& rows = j.at("matrix");
  const int nn = n * n;
  if (!rows.is_array() || static_cast<int>(rows.size()) != nn) bad("matrix must have n^2 rows");
  MatC t(nn, nn);
  for (int p = 0; p < nn; ++p) {
    if (!rows[p].is_array() || static_cast<int>(rows[p].size()) != nn) bad("matrix must be n^2 x n^2");
    for (int q = 0; q < nn; ++q) t(p, q) = scalar_from_json(rows[p][q]);
  }
  return Derivation::table(n, std::move(t));
}

json to_json(const Connection& c) {
  json forms = json::array();
  for (const auto& f : c.forms()) forms.push_back(to_json(f));
  return {{"forms", forms}};
}

Connection connection_from_json(const json& j, int degree_cap) {
  if (!j.is_object() || !j.contains("forms") || !j.at("forms").is_array()) bad("connection needs forms");
  std::vector<PolyMat> forms;
  for (const auto& f : j.at("forms")) forms.push_back(polymat_from_json(f, degree_cap));
  return Connection(std::move(forms));
}

json to_json(const VectorField& x) {
  json coeffs = json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_json(c));
  return {{"coeffs", coeffs}};
}

VectorField vector_field_from_json(const json& j, int degree_cap) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) bad("vector field needs coeffs");
  const auto& cs = j.at("coeffs");
  const auto m = static_cast<int>(cs.size());
  std::vector<Poly> coeffs;
  for (const auto& c : cs) coeffs.push_back(poly_from_json(c, m, degree_cap));
  return VectorField(std::move(coeffs));
}

json to_json(const Ideal& ideal) {
  if (const auto* pts = std::get_if<Ideal::Points>(&ideal.data())) {
    json list = json::array();
    for (const auto& p : pts->points) {
      json coords = json::array();
      for (const auto& c : p) coords.push_back(to_json(c));
      list.push_back(coords);
    }
    return {{"kind", "points"}, {"points", list}};
  }
  if (const auto* sl = std::get_if<Ideal::Slice>(&ideal.data())) {
    return {{"kind", "slice"}, {"var", sl->var_index}, {"value", to_json(sl->value)}};
  }
  return {{"kind", "unit"}};
}

Ideal ideal_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) bad("ideal needs kind");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "unit") return Ideal::unit();
  if (kind == "slice") return Ideal::slice(j.at("var").get<int>(), scalar_from_json(j.at("value")));
  if (kind == "points") {
    std::vector<Point> pts;
    for (const auto& p : j.at("points")) {
      Point x;
      for (const auto& c : p) x.push_back(scalar_from_json(c));
      pts.push_back(std::move(x));
    }
    return Ideal::points(std::move(pts));
  }
  bad("unknown ideal kind '" + kind + "'");
}

json to_json(const ClassificationResult& r) {
  json images = json::array();
  const HamiltonianMap& f = r.generator;
  for (int i = 0; i < f.model().n; ++i) {
    for (int j = 0; j < f.model().n; ++j) images.push_back(to_json(f.image(0, i, j)));
  }
  return {{"n", r.n},
          {"space_dim", r.space_dim},
          {"generator", {{"n", f.model().n}, {"images", images}}},
          {"jacobi_residual", r.jacobi_residual}};
}

}  // namespace ncpoisson::json
