#pragma once

// The degree-13 map psi: quartics, sections, the dual configuration and the
// identities relating psi to the dual quartics.

#include "cremona/config.hpp"
#include "cremona/identity.hpp"
#include "cremona/linear_system.hpp"
#include "cremona/picard.hpp"
#include "cremona/poly.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cremona {

/// Named polynomials: quartics "f0".."f24", planes "p034" and so on.
using PolyTable = std::map<std::string, Poly>;

inline std::string plane_name(int i, int j, int k) {
  return "p" + std::to_string(i) + std::to_string(j) + std::to_string(k);
}

/// The unique quartic of each class Q_alpha; throws if a system is not a point.
inline PolyTable build_quartics(const PointConfig& cfg, const std::string& prefix = "f", bool dual = false) {
  PolyTable out;
  Basis y = Basis::Y();
  const auto& labels = dual ? classes::dual_quartic_labels() : classes::quartic_labels();
  for (const auto& a : labels) {
    DivisorClass c = dual ? classes::P(a, y) : classes::Q(a, y);
    auto ls = linear_system(c, cfg);
    if (ls.dimension() != 1)
      throw std::runtime_error("system of " + std::string(dual ? "P" : "Q") + a + " has dimension " +
                               std::to_string(ls.dimension()));
    out[prefix + a] = monic(ls.basis[0]);
  }
  return out;
}

/// Adds every plane through three config points under the names pijk (any order
/// of the indices resolves through plane()).
inline void add_planes(PolyTable& t, const PointConfig& cfg, const std::string& prefix = "p") {
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k)
        t[prefix + std::to_string(i) + std::to_string(j) + std::to_string(k)] = plane_through(cfg, i, j, k);
}

/// Resolves names, accepting plane labels with unsorted indices ("p143").
inline const Poly& lookup(const PolyTable& t, std::string name) {
  if (name.size() == 4 && (name[0] == 'p' || name[0] == 'q')) std::sort(name.begin() + 1, name.end());
  auto it = t.find(name);
  if (it == t.end()) throw std::invalid_argument("no polynomial named " + name);
  return it->second;
}

/// A scalar times a product of named factors.
struct FactoredPoly {
  Rational scalar = 1;
  std::vector<std::string> factors;

  Poly expand(const PolyTable& t) const {
    Poly r = constant(scalar, 4);
    for (const auto& f : factors) r = r * lookup(t, f);
    return r;
  }
  Expr expr(const PolyTable& t) const {
    std::vector<std::pair<Expr, unsigned>> fs;
    for (const auto& f : factors) fs.emplace_back(Expr::leaf(lookup(t, f)), 1);
    return Expr::product(std::move(fs), scalar);
  }
};

struct Sections {
  PolyTable table;                      // quartics and planes of the source config
  std::map<std::string, FactoredPoly> factored;  // s0, s1, s2, s3, s1', s2', s3', s0'', s3''
  std::map<std::string, Poly> expanded;

  const Poly& operator[](const std::string& name) const { return expanded.at(name); }
  std::vector<Poly> psi() const { return {expanded.at("s0"), expanded.at("s1"), expanded.at("s2"), expanded.at("s3")}; }
  std::vector<Expr> psi_exprs() const {
    std::vector<Expr> out;
    for (const char* n : {"s0", "s1", "s2", "s3"}) out.push_back(Expr::leaf(expanded.at(n)));
    return out;
  }
};

inline const std::vector<std::pair<std::string, std::vector<std::string>>>& section_factors() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> v = {
      {"s0", {"p034", "f0", "f3", "f4"}},    {"s1", {"p045", "f3", "f4", "f24"}},
      {"s2", {"p234", "f0", "f3", "f13"}},   {"s3", {"p013", "f0", "f4", "f05"}},
      {"s1'", {"p035", "f3", "f4", "f13"}},  {"s2'", {"p024", "f0", "f3", "f05"}},
      {"s3'", {"p134", "f0", "f4", "f24"}},  {"s0''", {"p245", "f12", "f3", "f13"}},
      {"s3''", {"p135", "f12", "f4", "f24"}},
  };
  return v;
}

/// Assembles the sections and rescales s_i, s'_i so that s0 = s_i - s'_i for i = 1, 2, 3.
inline Sections build_sections(const PointConfig& cfg) {
  Sections s;
  s.table = build_quartics(cfg);
  add_planes(s.table, cfg);
  for (const auto& [name, fs] : section_factors()) {
    s.factored[name] = FactoredPoly{1, fs};
    s.expanded[name] = s.factored[name].expand(s.table);
  }
  const Poly& s0 = s.expanded["s0"];
  for (const char* i : {"1", "2", "3"}) {
    std::string a = std::string("s") + i, b = a + "'";
    auto coef = express_in_span(s0, {s.expanded[a], s.expanded[b]});
    if (!coef || (*coef)[0] == 0 || (*coef)[1] == 0)
      throw std::runtime_error("normalization system for " + a + " has no solution");
    s.factored[a].scalar = (*coef)[0];
    s.factored[b].scalar = -(*coef)[1];
    s.expanded[a] = s.expanded[a] * (*coef)[0];
    s.expanded[b] = s.expanded[b] * -(*coef)[1];
  }
  return s;
}

/// The normalization identities s0 = s_i - s'_i, checked exactly.
inline bool normalization_holds(const Sections& s) {
  for (const char* i : {"1", "2", "3"}) {
    std::string a = std::string("s") + i;
    if (s[a] - s[a + "'"] != s["s0"]) return false;
  }
  return true;
}

inline ProjPoint psi_eval(const ProjPoint& x, const Sections& s) {
  ProjPoint y;
  for (const auto& p : s.psi()) y.push_back(p.eval(x));
  if (std::all_of(y.begin(), y.end(), [](const Rational& c) { return c == 0; }))
    throw std::domain_error("point lies in the indeterminacy locus of psi");
  return normalize_point(y);
}

// ---------------------------------------------------------------------------
// Span identities and the quintic pencils.

struct SpanCheck {
  std::string member;   // e.g. "p034*f0"
  std::pair<std::string, std::string> spanning;
};

inline const std::vector<SpanCheck>& span_checks() {
  static const std::vector<SpanCheck> v = {
      {"p034*f0", {"p045*f24", "p035*f13"}}, {"p034*f3", {"p013*f05", "p134*f24"}},
      {"p034*f4", {"p234*f13", "p024*f05"}}, {"p135*f12", {"p143*f0", "p045*f3"}},
      {"p015*f25", {"p143*f0", "p045*f3"}},  {"p245*f12", {"p243*f0", "p035*f4"}},
      {"p025*f15", {"p243*f0", "p035*f4"}},  {"p123*f15", {"p024*f3", "p013*f4"}},
      {"p124*f25", {"p024*f3", "p013*f4"}},
  };
  return v;
}

/// "pijk*fA" as a polynomial.
inline Poly plane_times_quartic(const PolyTable& t, const std::string& product) {
  auto star = product.find('*');
  return lookup(t, product.substr(0, star)) * lookup(t, product.substr(star + 1));
}

inline bool span_check_holds(const PolyTable& t, const SpanCheck& c) {
  return express_in_span(plane_times_quartic(t, c.member),
                         {plane_times_quartic(t, c.spanning.first), plane_times_quartic(t, c.spanning.second)})
      .has_value();
}

struct PencilSection {
  std::string quintic;
  int plane[3];
  std::string quartic;
  std::vector<std::string> markers;  // exceptional generators E..
};

inline const std::vector<PencilSection>& pencil_sections() {
  static const std::vector<PencilSection> v = {
      {"D05", {0, 3, 4}, "0", {"E15", "E25"}}, {"D05", {0, 4, 5}, "24", {"E4"}},  {"D05", {0, 3, 5}, "13", {"E3"}},
      {"D13", {0, 3, 4}, "3", {"E12", "E15"}}, {"D13", {0, 1, 3}, "05", {"E0"}},  {"D13", {1, 3, 4}, "24", {"E4"}},
      {"D24", {0, 3, 4}, "4", {"E12", "E25"}}, {"D24", {2, 3, 4}, "13", {"E3"}},  {"D24", {0, 2, 4}, "05", {"E0"}},
      {"F15", {1, 3, 4}, "0", {"E25"}},        {"F15", {0, 4, 5}, "3", {"E12"}},  {"F15", {0, 1, 5}, "25", {"E0"}},
      {"F15", {1, 3, 5}, "12", {"E3"}},        {"F25", {2, 3, 4}, "0", {"E15"}},  {"F25", {0, 3, 5}, "4", {"E12"}},
      {"F25", {0, 2, 5}, "15", {"E0"}},        {"F25", {2, 4, 5}, "12", {"E4"}},  {"F12", {0, 2, 4}, "3", {"E15"}},
      {"F12", {0, 1, 3}, "4", {"E25"}},        {"F12", {1, 2, 3}, "15", {"E3"}},  {"F12", {1, 2, 4}, "25", {"E4"}},
  };
  return v;
}

/// Class of plane + quartic + markers on Y.
inline DivisorClass pencil_section_class(const PencilSection& p) {
  Basis y = Basis::Y();
  DivisorClass c = classes::plane(p.plane[0], p.plane[1], p.plane[2], y) + classes::Q(p.quartic, y);
  for (const auto& m : p.markers) c = c + DivisorClass::from_terms(y, {{m, 1}});
  return c;
}

inline Poly pencil_section_poly(const PolyTable& t, const PencilSection& p) {
  return lookup(t, plane_name(p.plane[0], p.plane[1], p.plane[2])) * lookup(t, "f" + p.quartic);
}

// ---------------------------------------------------------------------------
// Rational points on the quartics.

/// f(sX + tY) as a binary form in (s, t).
inline Poly restrict_to_line(const Poly& f, const ProjPoint& x, const ProjPoint& y) {
  std::vector<Poly> subs;
  for (int i = 0; i < 4; ++i) subs.push_back(Poly::linear({x[i], y[i]}));
  return f.compose(subs);
}

/// When f(sX + tY) = s^a t^b (A s + B t) with A, B nonzero, the remaining
/// intersection point B X - A Y.
inline std::optional<ProjPoint> residual_point(const Poly& f, const ProjPoint& x, const ProjPoint& y) {
  Poly g = restrict_to_line(f, x, y);
  if (g.is_zero()) return std::nullopt;
  int ms = 1 << 20, mt = 1 << 20;
  for (const auto& [m, c] : g.terms()) {
    auto e = unpack(m);
    ms = std::min(ms, e[0]);
    mt = std::min(mt, e[1]);
  }
  if (g.degree() - ms - mt != 1) return std::nullopt;
  Rational a = g.coeff({ms + 1, mt, 0, 0}), b = g.coeff({ms, mt + 1, 0, 0});
  if (a == 0 || b == 0) return std::nullopt;
  ProjPoint p(4);
  for (int i = 0; i < 4; ++i) p[i] = b * x[i] - a * y[i];
  return normalize_point(p);
}

/// Rational points on the quartic of class c: lines through the triple point,
/// or lines joining the double line to a simple line.
inline std::vector<ProjPoint> quartic_points(const Poly& f, const DivisorClass& c, const PointConfig& cfg,
                                             std::size_t count, std::uint64_t seed, long bound = 50) {
  PointSampler rng(seed, bound);
  std::optional<ProjPoint> triple;
  std::optional<std::pair<ProjPoint, ProjPoint>> dbl, simple;
  const Basis& b = c.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::string& g = b.generators()[i];
    if (g == "H") continue;
    Rational m = -c.coeffs()[i];
    if (g.size() == 2 && m == 3) triple = cfg[g[1] - '0'];
    if (g.size() == 3 && m == 2) dbl = std::make_pair(cfg[g[1] - '0'], cfg[g[2] - '0']);
  }
  // the simple line must miss the double line, else the joining lines lie in a plane of the config
  for (std::size_t i = 0; i < b.size() && dbl && !simple; ++i) {
    const std::string& g = b.generators()[i];
    if (g.size() != 3 || -c.coeffs()[i] != 1) continue;
    std::string dl;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b.generators()[j].size() == 3 && -c.coeffs()[j] == 2) dl = b.generators()[j];
    if (dl.size() != 3) break;
    if (g.find(dl[1]) == std::string::npos && g.find(dl[2]) == std::string::npos)
      simple = std::make_pair(cfg[g[1] - '0'], cfg[g[2] - '0']);
  }
  auto on_line = [&](const std::pair<ProjPoint, ProjPoint>& l) {
    Rational t = rng.integer();
    ProjPoint p(4);
    for (int i = 0; i < 4; ++i) p[i] = l.first[i] + t * l.second[i];
    return p;
  };
  std::vector<ProjPoint> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < 100 * count + 100; ++attempt) {
    std::optional<ProjPoint> p;
    if (triple) p = residual_point(f, *triple, rng.next(4));
    else if (dbl && simple) p = residual_point(f, on_line(*dbl), on_line(*simple));
    else throw std::invalid_argument("class has neither a triple point nor a double line");
    if (p && f.eval(*p) == 0) out.push_back(*p);
  }
  if (out.size() < count) throw std::runtime_error("could not sample enough points on the quartic");
  return out;
}

// ---------------------------------------------------------------------------
// The dual configuration.

/// Kernel of [a1 a2 -b1 -b2]: the intersection of two lines given by spanning pairs.
inline std::optional<ProjPoint> intersect_lines(const std::pair<ProjPoint, ProjPoint>& l1,
                                                const std::pair<ProjPoint, ProjPoint>& l2) {
  QMatrix m(4, 4);
  for (int i = 0; i < 4; ++i) {
    m(i, 0) = l1.first[i];
    m(i, 1) = l1.second[i];
    m(i, 2) = -l2.first[i];
    m(i, 3) = -l2.second[i];
  }
  auto ker = nullspace(m);
  if (ker.size() != 1) return std::nullopt;
  ProjPoint p(4);
  for (int i = 0; i < 4; ++i) p[i] = ker[0][0] * l1.first[i] + ker[0][1] * l1.second[i];
  return normalize_point(p);
}

inline bool on_line(const ProjPoint& p, const std::pair<ProjPoint, ProjPoint>& l) {
  return rank(point_matrix({l.first, l.second, p})) == 2;
}

struct DualConfig {
  PointConfig q;
  std::map<std::string, ProjPoint> point_images;  // labels 0, 3, 4: common image of the sampled points
  std::map<std::string, bool> contracted_to_point;
  std::map<std::string, std::pair<ProjPoint, ProjPoint>> lines;  // labels 05, 13, 24, 12, 15, 25
  std::map<std::string, std::size_t> line_fit_rank;              // rank of the image samples
  std::map<std::string, bool> concurrent;                       // q1, q2, q5: the three lines meet
  QMatrix M;                                                    // M p_i ~ q_i
  bool M_found = false;
  bool M_invertible = false;
};

/// Matrix M with M p_i ~ q_i for all i, from the kernel of the 24 x 22 system.
inline std::optional<QMatrix> projective_equivalence(const PointConfig& p, const PointConfig& q) {
  const std::size_t n = p.size();
  QMatrix a(4 * n, 16 + n);
  for (std::size_t i = 0; i < n; ++i)
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) a(4 * i + r, 4 * r + c) = p[i][c];
      a(4 * i + r, 16 + i) = -q[i][r];
    }
  auto ker = nullspace(a);
  if (ker.size() != 1) return std::nullopt;
  QMatrix m(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = ker[0][4 * r + c];
  return m;
}

inline DualConfig dual_config(const PointConfig& cfg, const Sections& s, std::uint64_t seed,
                              std::size_t samples_per_quartic = 3) {
  DualConfig d;
  Basis y = Basis::Y();
  std::uint64_t stream = seed;
  auto images_of = [&](const std::string& alpha) {
    const Poly& f = lookup(s.table, "f" + alpha);
    std::vector<ProjPoint> imgs;
    for (const auto& x : quartic_points(f, classes::Q(alpha, y), cfg, samples_per_quartic + 4, ++stream)) {
      try {
        imgs.push_back(psi_eval(x, s));
      } catch (const std::domain_error&) {
      }
      if (imgs.size() == samples_per_quartic) break;
    }
    if (imgs.size() < 2) throw std::runtime_error("too few usable samples on Q" + alpha);
    return imgs;
  };
  for (const char* a : {"0", "3", "4"}) {
    auto imgs = images_of(a);
    bool same = true;
    for (const auto& p : imgs) same = same && same_projective_point(p, imgs[0]);
    d.contracted_to_point[a] = same;
    d.point_images[a] = imgs[0];
  }
  for (const char* a : {"05", "13", "24", "12", "15", "25"}) {
    auto imgs = images_of(a);
    d.line_fit_rank[a] = rank(point_matrix(imgs));
    // spanning pair: the first image and the first one independent of it
    ProjPoint second = imgs[1];
    for (const auto& p : imgs)
      if (!same_projective_point(p, imgs[0])) {
        second = p;
        break;
      }
    d.lines[a] = {imgs[0], second};
  }
  auto meet = [&](const char* a, const char* b, const char* c, const std::string& label) {
    auto p = intersect_lines(d.lines[a], d.lines[b]);
    if (!p) throw std::runtime_error("lines l" + std::string(a) + " and l" + b + " do not meet in one point");
    d.concurrent[label] = on_line(*p, d.lines[c]);
    return *p;
  };
  ProjPoint q1 = meet("12", "13", "15", "q1");
  ProjPoint q2 = meet("12", "24", "25", "q2");
  ProjPoint q5 = meet("05", "15", "25", "q5");
  d.q = PointConfig{cfg.name + "-dual",
                    {d.point_images["0"], q1, q2, d.point_images["3"], d.point_images["4"], q5},
                    cfg.params};
  auto m = projective_equivalence(cfg, d.q);
  if (m) {
    d.M = *m;
    d.M_found = true;
    d.M_invertible = det(*m) != 0;
  }
  return d;
}

// ---------------------------------------------------------------------------
// Identities between psi and the dual side.

struct DualSide {
  PolyTable table;  // g_beta named "g1".."g24", planes named "q125" and so on
};

inline DualSide build_dual_side(const PointConfig& q) {
  DualSide d;
  d.table = build_quartics(q, "g", true);
  add_planes(d.table, q, "q");
  return d;
}

/// g_beta(psi) against prod_alpha f_alpha^{m_alpha_beta}.
inline std::pair<Expr, Expr> fusion_identity(const Sections& s, const DualSide& d, const std::string& beta) {
  Expr lhs = Expr::compose(lookup(d.table, "g" + beta), s.psi_exprs());
  std::vector<std::pair<Expr, unsigned>> f;
  for (const auto& a : classes::quartic_labels()) {
    long m = classes::fusion_exponent(a, beta);
    if (m > 0) f.emplace_back(Expr::leaf(lookup(s.table, "f" + a)), static_cast<unsigned>(m));
  }
  return {lhs, Expr::product(std::move(f))};
}

struct PlaneFusion {
  std::string dual_plane;
  std::vector<std::string> source_factors;
};

inline const std::vector<PlaneFusion>& plane_fusions() {
  static const std::vector<PlaneFusion> v = {
      {"q125", {"p125", "f12", "f15", "f25"}},
      {"q025", {"p124", "f0", "f05", "f25"}},
      {"q124", {"p135", "f4", "f24", "f12"}},
      {"q135", {"p025", "f3", "f13", "f15"}},
  };
  return v;
}

inline std::pair<Expr, Expr> plane_fusion_identity(const Sections& s, const DualSide& d, const PlaneFusion& pf) {
  Expr lhs = Expr::compose(lookup(d.table, pf.dual_plane), s.psi_exprs());
  return {lhs, FactoredPoly{1, pf.source_factors}.expr(s.table)};
}

/// det J(s0..s3) against f0^2 f3^2 f4^2 f05 f13 f24 f12 f15 f25.
inline std::pair<Expr, Expr> jacobian_identity(const Sections& s) {
  std::vector<std::pair<Expr, unsigned>> f;
  for (const auto& a : classes::quartic_labels()) {
    unsigned k = (a == "0" || a == "3" || a == "4") ? 2 : 1;
    f.emplace_back(Expr::leaf(lookup(s.table, "f" + a)), k);
  }
  return {Expr::jacobian(s.psi()), Expr::product(std::move(f))};
}

/// Components of psi' o psi, each a dual plane times three dual quartics.
inline const std::vector<std::vector<std::string>>& composite_factors() {
  static const std::vector<std::vector<std::string>> v = {
      {"q125", "g1", "g2", "g5"},
      {"q025", "g1", "g2", "g24"},
      {"q124", "g1", "g5", "g13"},
      {"q135", "g2", "g5", "g05"},
  };
  return v;
}

/// (f0 f3 f4)^7 (f05 f13 f24)^4 (f12 f15 f25)^3
inline Expr composite_cofactor(const Sections& s) {
  std::vector<std::pair<Expr, unsigned>> f;
  for (const auto& a : classes::quartic_labels()) {
    unsigned k = (a == "0" || a == "3" || a == "4") ? 7 : (a == "05" || a == "13" || a == "24") ? 4 : 3;
    f.emplace_back(Expr::leaf(lookup(s.table, "f" + a)), k);
  }
  return Expr::product(std::move(f));
}

struct CompositeLinearity {
  bool linear = false;          // every coordinate interpolates and reproduces the checks
  QMatrix M;                    // rows: fitted linear forms
  bool invertible = false;
  std::size_t fit_samples = 0;
  std::size_t check_samples = 0;
};

/// Fits t_i(psi(x)) / F(x) as linear forms in x and verifies them on more samples.
inline CompositeLinearity composite_linearity(const Sections& s, const DualSide& d, std::uint64_t seed,
                                              std::size_t fit = 5, std::size_t checks = 20) {
  CompositeLinearity res;
  res.fit_samples = fit;
  res.check_samples = checks;
  Expr cof = composite_cofactor(s);
  std::vector<Expr> t;
  for (const auto& names : composite_factors()) {
    Expr inner = FactoredPoly{1, names}.expr(d.table);
    t.push_back(Expr::compose(inner.expand(), s.psi_exprs()));
  }
  PointSampler rng(seed, 10000);
  std::vector<std::vector<Rational>> xs;
  std::vector<std::vector<Rational>> vals;  // vals[sample][i]
  while (xs.size() < fit + checks) {
    auto x = rng.next(4);
    Rational F = cof.eval(x);
    if (F == 0) continue;
    std::vector<Rational> v;
    for (const auto& ti : t) v.push_back(ti.eval(x) / F);
    xs.push_back(x);
    vals.push_back(v);
  }
  res.M = QMatrix(4, 4);
  res.linear = true;
  for (int i = 0; i < 4; ++i) {
    QMatrix a(fit, 5);
    for (std::size_t k = 0; k < fit; ++k) {
      for (int j = 0; j < 4; ++j) a(k, j) = xs[k][j];
      a(k, 4) = -vals[k][i];
    }
    auto ker = nullspace(a);
    if (ker.size() != 1 || ker[0][4] == 0) {
      res.linear = false;
      continue;
    }
    std::vector<Rational> row(4);
    for (int j = 0; j < 4; ++j) row[j] = ker[0][j] / ker[0][4];
    for (int j = 0; j < 4; ++j) res.M(i, j) = row[j];
    for (std::size_t k = fit; k < fit + checks; ++k) {
      Rational lin = 0;
      for (int j = 0; j < 4; ++j) lin += row[j] * xs[k][j];
      if (lin != vals[k][i]) res.linear = false;
    }
  }
  res.invertible = res.linear && det(res.M) != 0;
  return res;
}

// ---------------------------------------------------------------------------
// Lifted maps near the contracted quartics.

/// Quotient of two named factor products, common factors cancelled.
struct FactorRatio {
  std::vector<std::string> num, den;
};

inline FactorRatio section_ratio(const std::string& a, const std::string& b) {
  const auto& tab = section_factors();
  auto find = [&](const std::string& n) {
    for (const auto& [k, v] : tab)
      if (k == n) return v;
    throw std::invalid_argument("unknown section " + n);
  };
  auto num = find(a), den = find(b);
  FactorRatio r;
  for (const auto& f : num) {
    auto it = std::find(den.begin(), den.end(), f);
    if (it != den.end()) den.erase(it);
    else r.num.push_back(f);
  }
  r.den = den;
  return r;
}

inline const std::map<std::string, std::vector<std::pair<std::string, std::string>>>& lifted_maps() {
  static const std::map<std::string, std::vector<std::pair<std::string, std::string>>> m = {
      {"0", {{"s0", "s1"}, {"s2", "s0"}, {"s3", "s0"}}},
      {"05", {{"s1", "s0"}, {"s2'", "s0"}, {"s3", "s2'"}}},
      {"12", {{"s0''", "s1"}, {"s2", "s1"}, {"s3''", "s0''"}}},
  };
  return m;
}

/// Jacobian over (x1, x2, x3) of the rational functions N_k / D_k at x.
inline Rational ratio_jacobian_at(const std::vector<std::pair<Poly, Poly>>& ratios, const ProjPoint& x,
                                  const std::vector<int>& vars) {
  const std::size_t n = ratios.size();
  QMatrix m(n, vars.size());
  for (std::size_t k = 0; k < n; ++k) {
    const auto& [num, den] = ratios[k];
    Rational nv = num.eval(x), dv = den.eval(x);
    if (dv == 0) throw std::domain_error("denominator vanishes at the evaluation point");
    for (std::size_t j = 0; j < vars.size(); ++j)
      m(k, j) = (dv * num.derivative(vars[j]).eval(x) - nv * den.derivative(vars[j]).eval(x)) / (dv * dv);
  }
  return det(m);
}

/// Jacobian of the lifted map near Q_alpha, in the chart x0 = 1, at a point of Q_alpha.
inline Rational lifted_jacobian_at(const Sections& s, const std::string& alpha, ProjPoint x) {
  if (x[0] == 0) throw std::domain_error("point outside the chart x0 = 1");
  Rational inv = 1 / x[0];
  for (auto& c : x) c *= inv;
  std::vector<std::pair<Poly, Poly>> ratios;
  for (const auto& [a, b] : lifted_maps().at(alpha)) {
    auto r = section_ratio(a, b);
    Rational scale = s.factored.at(a).scalar / s.factored.at(b).scalar;
    ratios.emplace_back(FactoredPoly{scale, r.num}.expand(s.table), FactoredPoly{1, r.den}.expand(s.table));
  }
  return ratio_jacobian_at(ratios, x, {1, 2, 3});
}

}  // namespace cremona
