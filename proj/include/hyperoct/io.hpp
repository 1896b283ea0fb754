#pragma once

// JSON encoding of configurations and results. Rationals travel as "p/q"
// strings (bare "p" for integers) so nothing is ever rounded.

#include "hyperoct/orbit.hpp"
#include "hyperoct/rational.hpp"
#include "hyperoct/solver.hpp"
#include "hyperoct/strength.hpp"
#include "hyperoct/tight.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hyperoct {

using json = nlohmann::json;

inline json to_json(const Rational& q) { return to_string(q); }

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline json to_json(const BigInt& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(z);
  }
  return z.str();
}

inline Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(field + ": " + e.what(), e.position());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw std::invalid_argument(field + ": expected a \"p/q\" string");
}

inline json to_json(const DesignConfig& cfg) {
  json layers = json::array();
  for (const auto& l : cfg.layers) {
    layers.push_back({{"k", l.k}, {"r_squared", to_json(l.r_squared)}, {"weight", to_json(l.weight)}});
  }
  return {{"n", cfg.n}, {"layers", std::move(layers)}};
}

/// Parses and validates {"n": int, "layers": [{"k", "r_squared", "weight"}]}.
inline DesignConfig config_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("config: expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw std::invalid_argument("config: missing integer \"n\"");
  if (!j.contains("layers") || !j["layers"].is_array()) throw std::invalid_argument("config: missing array \"layers\"");
  DesignConfig cfg{j["n"].get<int>(), {}};
  std::size_t idx = 0;
  for (const auto& l : j["layers"]) {
    const std::string where = "layers[" + std::to_string(idx++) + "]";
    if (!l.is_object() || !l.contains("k") || !l["k"].is_number_integer()) {
      throw std::invalid_argument(where + ": missing integer \"k\"");
    }
    Layer layer;
    layer.k = l["k"].get<int>();
    layer.r_squared = l.contains("r_squared") ? rational_from_json(l["r_squared"], where + ".r_squared") : Rational{1};
    layer.weight = l.contains("weight") ? rational_from_json(l["weight"], where + ".weight") : Rational{1};
    cfg.layers.push_back(std::move(layer));
  }
  cfg.validate();
  return cfg;
}

inline DesignConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  return config_from_json(j);
}

inline json to_json(const StrengthReport& r) {
  json res = json::object();
  json order = json::array();
  for (const auto& x : r.residuals) {
    res[x.id] = to_json(x.value);
    order.push_back(x.id);
  }
  return {{"strength", r.strength},
          {"method", to_string(r.method)},
          {"residuals", std::move(res)},
          {"equation_order", std::move(order)},
          {"violated_9_design_equation", r.violated_9}};
}

inline json to_json(const FeasibilityResult& r) {
  json out{{"feasible", r.feasible}, {"clause", r.clause.tag()}, {"reason", r.reason}};
  out["solution"] = r.solution ? to_json(*r.solution) : json(nullptr);
  return out;
}

inline json to_json(const FisherBound& b) {
  json terms = json::array();
  for (const auto& t : b.terms) terms.push_back(to_json(t));
  return {{"n", b.n}, {"p", b.p}, {"t", b.t}, {"value", to_json(b.value)}, {"terms", std::move(terms)}};
}

inline json to_json(const TightnessCertificate& c) {
  json out{{"config", to_json(c.config)},
           {"report", to_json(c.report)},
           {"bound", to_json(c.bound)},
           {"t", c.t},
           {"p", c.p},
           {"size", to_json(c.size)},
           {"antipodal", c.antipodal},
           {"tight", c.tight}};
  out["oracle_agrees"] = c.oracle_agrees ? json(*c.oracle_agrees) : json(nullptr);
  return out;
}

inline json to_json(const TableEntry& e) {
  json out{{"J", e.J}, {"size", to_json(e.size)}, {"p", e.p}, {"strength", e.strength},
           {"method", e.method}, {"tight", e.tight}};
  out["spherical"] = e.spherical ? json(*e.spherical) : json(nullptr);
  out["witness"] = e.witness ? to_json(*e.witness) : json(nullptr);
  return out;
}

}  // namespace hyperoct
