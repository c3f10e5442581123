#include "horolib/serialize.hpp"

#include "horolib/error.hpp"

namespace horolib {

using nlohmann::json;

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InvalidInput& e) {
      throw InvalidInput(where + ": " + e.what());
    }
  }
  throw InvalidInput(where + ": expected a rational as \"p/q\" or an integer, got " + j.dump());
}

json to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_string(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw InvalidInput(where + ": expected a non-empty array of rows");
  std::size_t cols = j[0].size();
  Matrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw InvalidInput(where + ": row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t k = 0; k < cols; ++k)
      m(i, k) = rational_from_json(j[i][k], where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]");
  }
  return m;
}

json to_json(const AlgElement& x) {
  json out = json::object();
  const auto& labels = x.algebra()->labels();
  for (int k = 0; k < x.algebra()->dim(); ++k)
    if (sgn(x[k]) != 0) out[labels[k].name] = to_string(x[k]);
  return out;
}

AlgElement element_from_json(const AlgebraPtr& alg, const json& j) {
  if (j.is_array()) return from_defining_matrix(alg, matrix_from_json(j, "element"));
  if (!j.is_object()) throw InvalidInput("element: expected a label map or a matrix, got " + j.dump());
  AlgElement x(alg);
  for (const auto& [key, value] : j.items()) {
    auto k = alg->find_label(key);
    if (!k) throw InvalidInput("element: unknown basis label \"" + key + "\" for " + alg->name());
    x[*k] = rational_from_json(value, "element[\"" + key + "\"]");
  }
  return x;
}

json to_json(const GroupElement& g) { return {{"algebra", g.algebra()->name()}, {"matrix", to_json(g.matrix())}}; }

GroupElement group_from_json(const AlgebraPtr& alg, const json& j, const InvariantContext* ctx) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "identity") return GroupElement::identity(alg);
    if (s == "w0") return ctx ? ctx->w0rep() : w0_representative(alg);
    throw InvalidInput("group expression: unknown name \"" + s + "\"");
  }
  if (!j.is_object() || j.size() != 1) throw InvalidInput("group expression: expected a one-key object, got " + j.dump());
  const auto& [key, arg] = *j.items().begin();
  if (key == "exp") return exp_ad(element_from_json(alg, arg));
  if (key == "torus") {
    if (!arg.is_object() || !arg.contains("h") || !arg.contains("t"))
      throw InvalidInput("torus: expected {\"h\": ..., \"t\": ...}");
    AlgElement h(alg);
    if (arg["h"] == "h_theta") {
      if (!ctx) throw InvalidInput("torus: h_theta needs a context");
      h = ctx->h_theta();
    } else {
      h = element_from_json(alg, arg["h"]);
    }
    Rational t = rational_from_json(arg["t"], "torus.t");
    if (sgn(t) == 0) throw InvalidInput("torus: t must be nonzero");
    return torus_element(h, t);
  }
  if (key == "weyl") {
    std::vector<int> word;
    for (const auto& i : arg) {
      int v = i.get<int>();
      if (v < 1 || v > alg->rank()) throw InvalidInput("weyl: index " + std::to_string(v) + " out of range");
      word.push_back(v - 1);
    }
    return weyl_representative(alg, word);
  }
  if (key == "w0") return ctx ? ctx->w0rep() : w0_representative(alg);
  if (key == "matrix") return GroupElement::from_matrix(alg, matrix_from_json(arg, "matrix"));
  if (key == "product") {
    if (!arg.is_array()) throw InvalidInput("product: expected an array");
    GroupElement g = GroupElement::identity(alg);
    for (const auto& f : arg) g = g * group_from_json(alg, f, ctx);
    return g;
  }
  throw InvalidInput("group expression: unknown key \"" + key + "\"");
}

InvariantContext context_from_json(const json& j) {
  if (!j.is_object() || !j.contains("algebra") || !j.contains("theta"))
    throw InvalidInput("context: expected {\"algebra\": ..., \"theta\": [...]}");
  auto alg = build_algebra(AlgebraDescriptor::parse(j["algebra"].get<std::string>()));
  std::vector<int> theta;
  for (const auto& i : j["theta"]) {
    if (!i.is_number_integer()) throw InvalidInput("context.theta: expected 1-based integers");
    theta.push_back(i.get<int>());
  }
  return InvariantContext::create(alg, ThetaSet::from_one_based(theta));
}

json to_json(const InvariantContext& ctx) {
  return {{"algebra", ctx.algebra()->name()},
          {"theta", ctx.theta().one_based()},
          {"kind", ctx.is_commutative() ? "reflexive_commutative" : "heisenberg"},
          {"depth", ctx.depth()},
          {"d", ctx.d()}};
}

}  // namespace horolib
