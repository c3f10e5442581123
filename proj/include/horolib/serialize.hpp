#pragma once

#include "horolib/invariants.hpp"
#include "json.hpp"

namespace horolib {

// "p/q" strings; integers are also accepted on input.
Rational rational_from_json(const nlohmann::json& j, const std::string& where = "value");
nlohmann::json to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, const std::string& where = "matrix");

// {"E[1,2]": "3/1", "H[1]": "-1/2"}; zero coefficients are omitted.
nlohmann::json to_json(const AlgElement& x);
// Accepts a label map or a defining-representation matrix (array of rows).
AlgElement element_from_json(const AlgebraPtr& alg, const nlohmann::json& j);

// {"algebra": "sl3", "matrix": [[...], ...]}.
nlohmann::json to_json(const GroupElement& g);
// Group expressions: "identity", "w0", {"exp": element}, {"torus": {"h": "h_theta" | element, "t": q}},
// {"weyl": [i, ...]} (1-based), {"matrix": rows}, {"product": [expr, ...]}.
// "h_theta" needs a context.
GroupElement group_from_json(const AlgebraPtr& alg, const nlohmann::json& j, const InvariantContext* ctx = nullptr);

// {"algebra": "sl3", "theta": [1, 2]} with 1-based theta.
InvariantContext context_from_json(const nlohmann::json& j);
nlohmann::json to_json(const InvariantContext& ctx);

}  // namespace horolib
