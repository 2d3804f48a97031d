#pragma once

// Leading forms on the exceptional plane over a point, the two conics over p4,
// and the planar quartic system with three double points.

#include "cremona/config.hpp"
#include "cremona/linalg.hpp"
#include "cremona/poly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cremona {

/// Lowest-order form of f at p in the affine chart where p's last nonzero
/// coordinate is 1; variables are the remaining coordinates in order.
inline Poly restrict_to_exceptional(const Poly& f, const ProjPoint& p) {
  if (f.nvars() != 4 || p.size() != 4) throw std::invalid_argument("expects a form on P^3");
  int k = 3;
  while (k >= 0 && p[k] == 0) --k;
  if (k < 0) throw std::invalid_argument("zero vector is not a point");
  // x_k = 1, x_j = p_j / p_k + y_j
  std::vector<Poly> subs;
  int next = 0;
  for (int j = 0; j < 4; ++j) {
    if (j == k) subs.push_back(Poly::constant(3, 1));
    else subs.push_back(Poly::variable(3, next++) + Poly::constant(3, p[j] / p[k]));
  }
  Poly g = f.compose(subs);
  if (g.is_zero()) throw std::domain_error("form vanishes identically near the point");
  return g.homogeneous_part(g.min_degree());
}

/// The two conics on E4 as displayed, in (X, Y, Z).
inline Poly conic_h12(const Rational& a, const Rational& b, const Rational& c) {
  Poly X = var(0, 3), Y = var(1, 3), Z = var(2, 3);
  return Y * Z * (-a * (b - 1) * (b - 1) * c) - Y * (X - Z) * (a * b * (1 - 2 * c + b * c)) -
         X * (X - Z) * (a * a * b * (c - 1));
}

inline Poly conic_h24(const Rational& a, const Rational& b, const Rational& c) {
  Poly X = var(0, 3), Y = var(1, 3), Z = var(2, 3);
  return -(Y * (X - Z) * ((a - b) * (a - c) * (b - c))) - X * (X - Z) * (a * (a - b) * b * (a - c) * (c - 1)) +
         X * Z * (a * (a - b) * (b - 1) * (c - 1) * c) + X * Y * ((a - 1) * (b - 1) * b * (b - c) * c) -
         X * Y * (a * (b - 1) * (b - 1) * (a - c) * c);
}

/// The second point of a conic on the line bY - aZ = 0 besides [1:a:b], or
/// nothing when the conic does not pass through [1:a:b] or contains the line.
inline std::optional<ProjPoint> second_point_on_line(const Poly& h, const Rational& a, const Rational& b) {
  Poly s = var(0, 2), t = var(1, 2);
  Poly g = h.compose({s, t * a, t * b});
  if (g.is_zero()) return std::nullopt;
  auto q = g.divide_exact(s - t);
  if (!q || q->degree() != 1) return std::nullopt;
  Rational cs = q->coeff({1, 0, 0, 0}), ct = q->coeff({0, 1, 0, 0});
  // cs * s + ct * t = 0 at (s, t) = (ct, -cs)
  return normalize_point({ct, -cs * a, -cs * b});
}

inline ProjPoint expected_ypoint(const Rational& a, const Rational& b, const Rational& c) {
  return normalize_point({b - c, a * (1 - c), b * (1 - c)});
}

// ---------------------------------------------------------------------------

struct PlanarQuarticResult {
  std::vector<std::string> violations;  // empty when the hypotheses hold
  std::size_t dimension = 0;            // projective dimension of the system
  Rational minor_246 = 0;               // minor of the condition matrix at columns r2, r4, r6
  QMatrix conditions;                   // 3 x 6
};

/// Quartics double at the first three points and through the other three.
inline PlanarQuarticResult planar_quartic_dim(const std::vector<ProjPoint>& pts) {
  if (pts.size() != 6) throw std::invalid_argument("expects six points");
  for (const auto& p : pts)
    if (p.size() != 3) throw std::invalid_argument("expects points of P^2");
  PlanarQuarticResult res;
  QMatrix tri = point_matrix({pts[0], pts[1], pts[2]});
  if (det(tri) == 0) {
    res.violations.push_back("clause 1: first three points are collinear");
    return res;
  }
  // coordinates in which the first three points are the coordinate points
  auto inv = inverse(tri.transpose());
  std::vector<ProjPoint> rest;
  for (int i = 3; i < 6; ++i) rest.push_back(*inv * pts[i]);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      if (rest[i][k] == 0)
        res.violations.push_back("clause 2: p" + std::to_string(i + 3) + " lies on a side of the triangle");
  auto conic = [](const ProjPoint& p) {
    return std::vector<Rational>{p[0] * p[0], p[1] * p[1], p[2] * p[2], p[0] * p[1], p[0] * p[2], p[1] * p[2]};
  };
  QMatrix cm(6, 6);
  for (int i = 0; i < 6; ++i) {
    auto row = conic(pts[i]);
    for (int j = 0; j < 6; ++j) cm(i, j) = row[j];
  }
  if (det(cm) == 0) res.violations.push_back("clause 3: a conic passes through all six points");
  if (!res.violations.empty()) return res;
  // monomials x^2y^2, x^2z^2, y^2z^2, x^2yz, xy^2z, xyz^2
  res.conditions = QMatrix(3, 6);
  for (int i = 0; i < 3; ++i) {
    const auto& p = rest[i];
    const Rational &x = p[0], &y = p[1], &z = p[2];
    std::vector<Rational> r = {x * x * y * y, x * x * z * z, y * y * z * z, x * x * y * z, x * y * y * z, x * y * z * z};
    for (int j = 0; j < 6; ++j) res.conditions(i, j) = r[j];
  }
  res.dimension = 6 - rank(res.conditions) - 1;
  QMatrix minor(3, 3);
  const int cols[3] = {1, 3, 5};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) minor(i, j) = res.conditions(i, cols[j]);
  res.minor_246 = det(minor);
  return res;
}

}  // namespace cremona
