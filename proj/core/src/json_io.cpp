#include "diraceig/json_io.hpp"

#include <json.hpp>

namespace diraceig {

namespace {

using nlohmann::json;

json formula_to_json(const RationalFormula& f) {
  if (f.is_constant()) {
    const Rational value = f.num.empty() ? Rational(0) : f.num.front() / f.den.front();
    return value.str();
  }
  const auto coeffs = [](const std::vector<Rational>& c) {
    json arr = json::array();
    for (const auto& x : c) arr.push_back(x.str());
    return arr;
  };
  return json{{"num", coeffs(f.num)}, {"den", coeffs(f.den)}};
}

}  // namespace

std::string result_to_json(const SymmetricPair& p, const DiracResult& r, int digits,
                           bool formal) {
  json j;
  j["space"] = p.name;
  j["n"] = p.n;
  j["lambda_sq"] = r.lambda_sq.str();
  j["lambda_approx"] = sqrt_decimal(r.lambda_sq, digits);
  j["terms"] = {{"distance", r.term_distance.str()},
                {"lambda_sum", r.term_lambda.str()},
                {"dim", r.term_dim.str()}};
  j["lambda_set_size"] = r.lambda_set.size();
  j["method"] = method_name(r.method);
  if (formal) j["formal"] = true;
  return j.dump(2);
}

std::string catalog_to_json() {
  json out = json::array();
  for (const auto& e : catalog()) {
    json j;
    j["key"] = e.key;
    j["name"] = e.name;
    j["dim"] = e.parameterized ? std::string("4m") : std::to_string(e.fixed_dim);
    if (e.parameterized) {
      j["min_m"] = e.min_m;
      j["m_step"] = e.m_step;
    }
    j["spin"] = e.spin_needs_even_m ? json("iff m even") : json(e.spin);
    j["spin_unique"] = e.spin_unique;
    json recipe;
    if (e.recipe == CatalogEntry::Recipe::marked_node) {
      recipe["kind"] = "marked-node";
      recipe["family"] = family_name(e.family);
      recipe["node"] = e.node;
    } else {
      recipe["kind"] = "coordinate";
      recipe["family"] = family_name(e.family);
    }
    j["recipe"] = recipe;
    if (e.expected_lambda_sq) j["expected_lambda_sq"] = formula_to_json(*e.expected_lambda_sq);
    if (e.expected_lambda_count)
      j["expected_lambda_set_size"] = formula_to_json(*e.expected_lambda_count);
    out.push_back(std::move(j));
  }
  return out.dump(2);
}

}  // namespace diraceig
