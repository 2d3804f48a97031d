#pragma once

// Six-point configurations in P^3 with exact coordinates.

#include "cremona/linalg.hpp"
#include "cremona/rational.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cremona {

using ProjPoint = std::vector<Rational>;

struct PointConfig {
  std::string name;
  std::vector<ProjPoint> points;
  std::map<std::string, Rational> params;

  const ProjPoint& operator[](std::size_t i) const { return points.at(i); }
  std::size_t size() const { return points.size(); }
  Rational param(const std::string& key) const {
    auto it = params.find(key);
    if (it == params.end()) throw std::invalid_argument("config " + name + " has no parameter " + key);
    return it->second;
  }
};

/// True iff the two vectors are nonzero multiples of each other.
inline bool same_projective_point(const ProjPoint& a, const ProjPoint& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] * b[j] != a[j] * b[i]) return false;
  bool az = true, bz = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    az = az && a[i] == 0;
    bz = bz && b[i] == 0;
  }
  return az == bz;
}

/// Scales to the representative whose first nonzero coordinate is 1.
inline ProjPoint normalize_point(ProjPoint p) {
  for (const auto& c : p)
    if (c != 0) {
      Rational s = 1 / c;
      for (auto& x : p) x *= s;
      return p;
    }
  throw std::invalid_argument("zero vector is not a projective point");
}

inline QMatrix point_matrix(const std::vector<ProjPoint>& pts) {
  QMatrix m(pts.size(), pts.empty() ? 0 : pts[0].size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts[i].size(); ++j) m(i, j) = pts[i][j];
  return m;
}

/// Violated clauses of linear general position; empty when the config is fine.
inline std::vector<std::string> genericity_violations(const PointConfig& c) {
  std::vector<std::string> bad;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i].size() != 4) bad.push_back("p" + std::to_string(i) + " does not have 4 coordinates");
    else if (std::all_of(c[i].begin(), c[i].end(), [](const Rational& q) { return q == 0; }))
      bad.push_back("p" + std::to_string(i) + " is the zero vector");
  }
  if (!bad.empty()) return bad;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (same_projective_point(c[i], c[j]))
        bad.push_back("p" + std::to_string(i) + " = p" + std::to_string(j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l)
          if (det(point_matrix({c[i], c[j], c[k], c[l]})) == 0)
            bad.push_back("p" + std::to_string(i) + ",p" + std::to_string(j) + ",p" + std::to_string(k) + ",p" +
                          std::to_string(l) + " coplanar");
  return bad;
}

inline bool is_linearly_general(const PointConfig& c) { return genericity_violations(c).empty(); }

namespace configs {

inline ProjPoint pt(Rational a, Rational b, Rational c, Rational d) { return {a, b, c, d}; }

/// Anticanonical placement: p0 = [1:A:B:C], then the four coordinate points and [1:1:1:1].
inline PointConfig anticanonical(const Rational& A, const Rational& B, const Rational& C) {
  return {"A",
          {pt(1, A, B, C), pt(1, 0, 0, 0), pt(0, 1, 0, 0), pt(0, 0, 1, 0), pt(0, 0, 0, 1), pt(1, 1, 1, 1)},
          {{"A", A}, {"B", B}, {"C", C}}};
}

/// Placement used for the quartic Q0.
inline PointConfig quartic_zero(const Rational& a, const Rational& b, const Rational& c) {
  return {"B",
          {pt(1, 0, 0, 0), pt(0, 1, 0, 0), pt(0, 0, 1, 0), pt(1, a, b, c), pt(1, 1, 1, 1), pt(0, 0, 0, 1)},
          {{"a", a}, {"b", b}, {"c", c}}};
}

/// Placement used for Q12, Q24 and the exceptional plane over p4.
inline PointConfig quartic_lines(const Rational& a, const Rational& b, const Rational& c) {
  return {"C",
          {pt(0, 1, 0, 0), pt(1, 0, 0, 0), pt(1, a, b, c), pt(0, 0, 1, 0), pt(0, 0, 0, 1), pt(1, 1, 1, 1)},
          {{"a", a}, {"b", b}, {"c", c}}};
}

/// Placement in which p0..p5 lie on the standard rational normal curve image.
inline PointConfig normal_curve(const Rational& a, const Rational& b, const Rational& c) {
  return {"D",
          {pt(1, 0, 0, 0), pt(0, 0, 0, 1), pt(0, 0, 1, 0), pt(1, 1, 1, 1), pt(1, 1 / a, 1 / b, 1 / c),
           pt(0, 1, 0, 0)},
          {{"a", a}, {"b", b}, {"c", c}}};
}

/// Placement in which the planes p125, p124, p135, p025 are coordinate planes.
inline PointConfig coordinate_planes(const Rational& a, const Rational& b, const Rational& c) {
  return {"E",
          {pt(1, a, 1, 0), pt(0, 0, 0, 1), pt(0, 0, 1, 0), pt(1, 1, 0, b), pt(1, 0, c, 1), pt(0, 1, 0, 0)},
          {{"a", a}, {"b", b}, {"c", c}}};
}

inline PointConfig by_name(const std::string& kind, const Rational& a, const Rational& b, const Rational& c) {
  if (kind == "A") return anticanonical(a, b, c);
  if (kind == "B") return quartic_zero(a, b, c);
  if (kind == "C") return quartic_lines(a, b, c);
  if (kind == "D") return normal_curve(a, b, c);
  if (kind == "E") return coordinate_planes(a, b, c);
  throw std::invalid_argument("unknown config kind " + kind);
}

/// Parameter-level degeneracies beyond linear general position.
inline std::vector<std::string> parameter_violations(const std::string& kind, const Rational& a, const Rational& b,
                                                     const Rational& c) {
  std::vector<std::string> bad;
  if (kind == "A") return bad;
  if (a == 0 || b == 0 || c == 0) bad.push_back("a parameter is zero");
  if (a == 1 || b == 1 || c == 1) bad.push_back("a parameter equals 1");
  if (a == b || a == c || b == c) bad.push_back("parameters not distinct");
  if (!bad.empty()) return bad;
  if (kind == "D") {
    Rational alpha = (c - 1) * (b - a) / ((b - 1) * (c - a));
    for (const Rational& f : std::vector<Rational>{-1, -1 / c, -1 / b, 0, -1 / a})
      if (alpha == f) bad.push_back("alpha hits a forbidden value");
  }
  return bad;
}

/// Draws parameters with small numerators and denominators until the config is generic.
inline PointConfig random_config(const std::string& kind, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Rational v[3];
    for (auto& x : v) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
    }
    if (!parameter_violations(kind, v[0], v[1], v[2]).empty()) continue;
    PointConfig cfg = by_name(kind, v[0], v[1], v[2]);
    if (is_linearly_general(cfg)) return cfg;
  }
  throw std::runtime_error("no generic parameters found");
}

}  // namespace configs
}  // namespace cremona
