#pragma once

// Restrictions of the quartics and planes to the rational normal curve through
// the six points of the curve placement.

#include "cremona/cremona_map.hpp"
#include "cremona/config.hpp"
#include "cremona/poly.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cremona {

/// Parametrization [u:v] -> P^3 of the curve through the six points.
inline std::vector<Poly> rnc_parametrization(const Rational& a, const Rational& b, const Rational& c) {
  Poly u = var(0, 2), v = var(1, 2);
  Poly la = u * a + v, lb = u * b + v, lc = u * c + v, l1 = u + v;
  return {la * lb * lc, l1 * lb * lc, l1 * la * lc, l1 * la * lb};
}

/// Exponents of the known factors u, v, u+v, au+v, bu+v, cu+v.
using FactorExponents = std::array<int, 6>;

struct RncPrediction {
  std::string name;
  FactorExponents exponents;
  bool linear_residual;
};

inline const std::vector<RncPrediction>& rnc_predictions() {
  static const std::vector<RncPrediction> v = {
      {"f12", {2, 2, 2, 2, 2, 2}, false}, {"f15", {2, 2, 2, 2, 2, 2}, false}, {"f25", {2, 2, 2, 2, 2, 2}, false},
      {"f05", {2, 2, 2, 2, 2, 2}, false}, {"f13", {2, 2, 2, 2, 2, 2}, false}, {"f24", {2, 2, 2, 2, 2, 2}, false},
      {"f0", {1, 1, 2, 3, 2, 2}, true},   {"f3", {2, 1, 1, 2, 2, 3}, true},   {"f4", {1, 2, 1, 2, 3, 2}, true},
      {"p034", {1, 1, 1, 0, 0, 0}, false}, {"p045", {0, 1, 1, 1, 0, 0}, false}, {"p234", {1, 1, 0, 0, 1, 0}, false},
      {"p013", {1, 0, 1, 0, 0, 1}, false},
  };
  return v;
}

struct RncRow {
  std::string name;
  bool divides = false;         // predicted factors divide exactly
  int residual_degree = -1;
  bool matches = false;         // residual has the predicted shape
  std::optional<Rational> parameter;  // t with residual ~ u + t v
};

struct RncResult {
  std::vector<RncRow> rows;
  Rational alpha, beta, gamma;
  Rational alpha_formula;
  bool alpha_matches = false;
  bool alpha_avoids_forbidden = false;
  bool through_points = false;  // the curve passes through p0..p5
  bool all_match() const {
    for (const auto& r : rows)
      if (!r.matches) return false;
    return alpha_matches && alpha_avoids_forbidden && through_points;
  }
};

inline RncResult rnc_restrict(const PointConfig& cfg, const PolyTable& table) {
  const Rational a = cfg.param("a"), b = cfg.param("b"), c = cfg.param("c");
  auto r0 = rnc_parametrization(a, b, c);
  Poly u = var(0, 2), v = var(1, 2);
  const std::array<Poly, 6> known = {u, v, u + v, u * a + v, u * b + v, u * c + v};
  RncResult res;
  for (const auto& pred : rnc_predictions()) {
    RncRow row;
    row.name = pred.name;
    Poly g = lookup(table, pred.name).compose(r0);
    Poly divisor = Poly::constant(2, 1);
    for (int k = 0; k < 6; ++k) divisor = divisor * known[k].pow(pred.exponents[k]);
    auto q = g.is_zero() ? std::nullopt : g.divide_exact(divisor);
    row.divides = q.has_value();
    if (q) {
      row.residual_degree = q->degree();
      if (pred.linear_residual && row.residual_degree == 1) {
        Rational cu = q->coeff({1, 0, 0, 0}), cv = q->coeff({0, 1, 0, 0});
        if (cu != 0) row.parameter = cv / cu;
      }
      row.matches = pred.linear_residual ? row.parameter.has_value() : row.residual_degree == 0;
    }
    res.rows.push_back(row);
  }
  auto param = [&](const std::string& n) {
    for (const auto& r : res.rows)
      if (r.name == n && r.parameter) return *r.parameter;
    return Rational(0);
  };
  res.alpha = param("f0");
  res.beta = param("f3");
  res.gamma = param("f4");
  res.alpha_formula = (c - 1) * (b - a) / ((b - 1) * (c - a));
  res.alpha_matches = res.alpha == res.alpha_formula;
  res.alpha_avoids_forbidden = true;
  for (const Rational& f : std::vector<Rational>{-1, -1 / c, -1 / b, 0, -1 / a})
    if (res.alpha == f) res.alpha_avoids_forbidden = false;
  // parameters of p0..p5: u+v = 0, cu+v = 0, bu+v = 0, u = 0, v = 0, au+v = 0
  const std::vector<std::vector<Rational>> params = {{1, -1}, {1, -c}, {1, -b}, {0, 1}, {1, 0}, {1, -a}};
  res.through_points = cfg.size() == 6;
  for (std::size_t i = 0; i < 6 && res.through_points; ++i) {
    ProjPoint x;
    for (const auto& comp : r0) x.push_back(comp.eval(params[i]));
    res.through_points = same_projective_point(x, cfg[i]);
  }
  return res;
}

struct ImageCurveCheck {
  bool holds = false;
  std::vector<Rational> diagonal;  // psi(R0) = diag * R' coordinatewise
  std::size_t samples = 0;
};

/// psi along the curve against [1 : v/(u+alpha v) : u/(u+gamma v) : (u+v)/(u+beta v)],
/// up to one diagonal rescaling fitted on the first sample.
inline ImageCurveCheck rnc_image_check(const PointConfig& cfg, const Sections& s, const RncResult& r,
                                       std::uint64_t seed, std::size_t samples = 20) {
  ImageCurveCheck res;
  auto r0 = rnc_parametrization(cfg.param("a"), cfg.param("b"), cfg.param("c"));
  PointSampler rng(seed, 10000);
  while (res.samples < samples) {
    auto uv = rng.next(2);
    const Rational &u = uv[0], &v = uv[1];
    Rational da = u + r.alpha * v, db = u + r.beta * v, dg = u + r.gamma * v;
    if (u == 0 || v == 0 || u + v == 0 || da == 0 || db == 0 || dg == 0) continue;
    ProjPoint x;
    for (const auto& comp : r0) x.push_back(comp.eval(uv));
    ProjPoint y;
    try {
      y = psi_eval(x, s);
    } catch (const std::domain_error&) {
      continue;
    }
    ProjPoint expect = {1, v / da, u / dg, (u + v) / db};
    if (y[0] == 0) return res;
    std::vector<Rational> ratio(4);
    for (int i = 0; i < 4; ++i) ratio[i] = y[i] / y[0] / expect[i];
    if (res.samples == 0) res.diagonal = ratio;
    else if (ratio != res.diagonal) return res;
    ++res.samples;
  }
  res.holds = true;
  return res;
}

}  // namespace cremona
