#pragma once

// JSON encodings: rationals as "p/q" strings, configs, polynomials, classes and
// matrices.

#include "cremona/config.hpp"
#include "cremona/linalg.hpp"
#include "cremona/nskummer.hpp"
#include "cremona/picard.hpp"
#include "cremona/poly.hpp"
#include "cremona/rational.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cremona::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return q.get_str(); }

/// Accepts "p/q" strings and plain JSON integers.
inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational as \"p/q\" or an integer, got " + j.dump());
}

inline Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_json(q));
  return a;
}

inline std::vector<Rational> vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  std::vector<Rational> v;
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

inline Json to_json(const QMatrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    a.push_back(row);
  }
  return a;
}

inline QMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a nonempty array of rows");
  QMatrix m(j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    auto row = vector_from_json(j[r]);
    if (row.size() != m.cols()) throw std::invalid_argument("ragged matrix");
    for (std::size_t c = 0; c < row.size(); ++c) m(r, c) = row[c];
  }
  return m;
}

// ---------------------------------------------------------------------------

inline Json to_json(const DivisorClass& c) {
  return Json{{"basis", c.basis().tag()}, {"coeffs", to_json(c.coeffs())}};
}

inline Basis basis_from_tag(const std::string& tag) {
  if (tag == "X") return Basis::X();
  if (tag == "Y") return Basis::Y();
  if (tag.size() > 4 && tag.rfind("Yn(", 0) == 0 && tag.back() == ')')
    return Basis::Yn(std::stoi(tag.substr(3, tag.size() - 4)));
  throw std::invalid_argument("unknown basis tag " + tag);
}

inline DivisorClass class_from_json(const Json& j) {
  Basis b = basis_from_tag(j.at("basis").get<std::string>());
  return DivisorClass(b, vector_from_json(j.at("coeffs")));
}

inline Json to_json(const NSClass& x) { return to_json(x.coords()); }

// ---------------------------------------------------------------------------

/// [[exponents], "coefficient"] pairs in descending monomial order.
inline Json to_json(const Poly& p) {
  Json terms = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    auto e = unpack(it->first);
    Json ex = Json::array();
    for (int i = 0; i < p.nvars(); ++i) ex.push_back(e[i]);
    terms.push_back(Json::array({ex, to_json(it->second)}));
  }
  return Json{{"nvars", p.nvars()}, {"terms", terms}};
}

inline Poly poly_from_json(const Json& j) {
  int n = j.at("nvars").get<int>();
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("bad variable count");
  Poly p(n);
  for (const auto& t : j.at("terms")) {
    Exponents e{};
    const auto& ex = t.at(0);
    if (static_cast<int>(ex.size()) != n) throw std::invalid_argument("exponent vector has the wrong length");
    for (int i = 0; i < n; ++i) e[i] = ex[i].get<int>();
    p.add_term(pack(e), rational_from_json(t.at(1)));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Configs: {"name", "kind", "params": {"a": "p/q"}, "points": [["p/q", ...]]}.
// Either points or kind with its three parameters must be present.

inline Json to_json(const PointConfig& cfg) {
  Json params = Json::object();
  for (const auto& [k, v] : cfg.params) params[k] = to_json(v);
  Json pts = Json::array();
  for (const auto& p : cfg.points) pts.push_back(to_json(p));
  return Json{{"name", cfg.name}, {"params", params}, {"points", pts}};
}

inline std::vector<std::string> kind_parameter_names(const std::string& kind) {
  if (kind == "A") return {"A", "B", "C"};
  return {"a", "b", "c"};
}

inline PointConfig config_from_json(const Json& j) {
  PointConfig cfg;
  cfg.name = j.value("name", std::string());
  std::string kind = j.value("kind", std::string());
  if (j.contains("params"))
    for (const auto& [k, v] : j.at("params").items()) cfg.params[k] = rational_from_json(v);
  if (j.contains("points"))
    for (const auto& p : j.at("points")) {
      auto v = vector_from_json(p);
      if (v.size() != 4) throw std::invalid_argument("points must have four homogeneous coordinates");
      cfg.points.push_back(v);
    }
  if (!kind.empty()) {
    auto names = kind_parameter_names(kind);
    for (const auto& n : names)
      if (!cfg.params.count(n)) throw std::invalid_argument("kind " + kind + " needs parameter " + n);
    PointConfig placed = configs::by_name(kind, cfg.param(names[0]), cfg.param(names[1]), cfg.param(names[2]));
    if (cfg.points.empty()) cfg.points = placed.points;
    else if (cfg.points.size() != placed.points.size())
      throw std::invalid_argument("point count does not match kind " + kind);
    else
      for (std::size_t i = 0; i < cfg.points.size(); ++i)
        if (!same_projective_point(cfg.points[i], placed.points[i]))
          throw std::invalid_argument("point p" + std::to_string(i) + " does not match the placement of kind " + kind);
    if (cfg.name.empty()) cfg.name = kind;
  }
  if (cfg.points.empty()) throw std::invalid_argument("config has neither points nor a kind");
  return cfg;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

inline PointConfig load_config(const std::string& path) { return config_from_json(read_json_file(path)); }

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace cremona::io
