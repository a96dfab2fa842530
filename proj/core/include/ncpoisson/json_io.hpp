#pragma once

#include <nlohmann/json.hpp>

#include "ncpoisson/connection.hpp"
#include "ncpoisson/ideals.hpp"
#include "ncpoisson/poisson.hpp"

namespace ncpoisson::json {

using nlohmann::json;

// Scalar: [re, im]
json to_json(Scalar z);
Scalar scalar_from_json(const json& j);

// Poly: [{"exps": [e1, ...], "coeff": [re, im]}, ...] in exponent order.
json to_json(const Poly& p);
Poly poly_from_json(const json& j, int num_vars, int degree_cap = kDefaultDegreeCap);

// PolyMat: {"n": n, "vars": m, "entries": [[Poly, ...], ...]}
json to_json(const PolyMat& m);
PolyMat polymat_from_json(const json& j, int degree_cap = kDefaultDegreeCap);

// Table derivation: {"n": n, "matrix": [[[re, im], ...], ...]}; row p, column q act on row-major
// E_ij coordinates (q = i * n + j is the input basis element, p the output coordinate).
json table_to_json(const Derivation& d);
Derivation table_from_json(const json& j);

// Connection: {"forms": [PolyMat, ...]}; VectorField: {"coeffs": [Poly, ...]}
json to_json(const Connection& c);
Connection connection_from_json(const json& j, int degree_cap = kDefaultDegreeCap);
json to_json(const VectorField& x);
VectorField vector_field_from_json(const json& j, int degree_cap = kDefaultDegreeCap);

// Ideal: {"kind": "points", "points": [[Scalar, ...], ...]} | {"kind": "slice", "var": i, "value": Scalar}
//        | {"kind": "unit"}
json to_json(const Ideal& ideal);
Ideal ideal_from_json(const json& j);

// {"n", "space_dim", "generator": {"n", "images": [PolyMat per E_ij]}, "jacobi_residual"}
json to_json(const ClassificationResult& r);

}  // namespace ncpoisson::json
