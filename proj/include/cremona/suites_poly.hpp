#pragma once

// Polynomial suites on a point configuration: quartics, complete systems,
// sections, Jacobian, fusion, dual configuration, normal curve, exceptional plane
// and the random property checks.

#include "cremona/config.hpp"
#include "cremona/cremona_map.hpp"
#include "cremona/exceptional.hpp"
#include "cremona/identity.hpp"
#include "cremona/linear_system.hpp"
#include "cremona/properties.hpp"
#include "cremona/reference_forms.hpp"
#include "cremona/report.hpp"
#include "cremona/rnc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cremona::suites {

using io::Json;

struct PolyOptions {
  std::uint64_t seed = 1;
  CheckMode mode = CheckMode::Sample;
  std::size_t samples = 40;
};

inline Json point_json(const ProjPoint& p) { return io::to_json(normalize_point(p)); }

inline bool is_placement(const PointConfig& cfg) {
  return cfg.name.size() == 1 && cfg.name[0] >= 'A' && cfg.name[0] <= 'E';
}

/// Linear general position plus the parameter degeneracies of the named placements.
inline std::vector<std::string> config_violations(const PointConfig& cfg) {
  std::vector<std::string> out;
  if (cfg.size() != 6) out.push_back("expected six points, got " + std::to_string(cfg.size()));
  for (const auto& p : cfg.points)
    if (p.size() != 4) out.push_back("points must lie in P^3");
  if (!out.empty()) return out;
  out = genericity_violations(cfg);
  if (is_placement(cfg)) {
    auto names = io::kind_parameter_names(cfg.name);
    bool have = true;
    for (const auto& n : names) have = have && cfg.params.count(n);
    if (have)
      for (auto& v : configs::parameter_violations(cfg.name, cfg.param(names[0]), cfg.param(names[1]), cfg.param(names[2])))
        out.push_back(v);
  }
  return out;
}

inline Report make_report(const std::string& suite, const PointConfig& cfg, const PolyOptions& opt) {
  Report rep;
  rep.suite = suite;
  rep.seed = opt.seed;
  rep.info = {{"config", cfg.name}, {"mode", to_string(opt.mode)}, {"samples", opt.samples}};
  return rep;
}

inline SampleOptions sample_options(const PolyOptions& opt, std::uint64_t stream) {
  SampleOptions s;
  s.samples = opt.samples;
  s.seed = opt.seed * 1000003ULL + stream;
  return s;
}

inline Json identity_json(const IdentityResult& r) {
  Json j{{"mode", to_string(r.mode)}, {"scalar", r.scalar.get_str()}, {"samples", r.samples_used},
         {"skipped", r.skipped}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

// ---------------------------------------------------------------------------

/// Rational points of a quartic double at the six points and containing the
/// fifteen lines: join p_i to a point of a line p_j p_k.
inline std::vector<ProjPoint> anticanonical_points(const Poly& f, const PointConfig& cfg, std::size_t count,
                                                   std::uint64_t seed) {
  PointSampler rng(seed, 50);
  std::vector<ProjPoint> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < 50 * count; ++attempt) {
    int i = static_cast<int>(attempt % 6);
    int j = (i + 1 + static_cast<int>(attempt / 6 % 5)) % 6;
    int k = (j + 1) % 6 == i ? (j + 2) % 6 : (j + 1) % 6;
    Rational t = rng.integer();
    ProjPoint y(4);
    for (int c = 0; c < 4; ++c) y[c] = cfg[j][c] + t * cfg[k][c];
    auto p = residual_point(f, cfg[i], y);
    if (p && f.eval(*p) == 0) out.push_back(*p);
  }
  return out;
}

inline Report poly_quartics(const PointConfig& cfg, const PolyOptions& opt = {}) {
  Report rep = make_report("poly-quartics", cfg, opt);
  Basis y = Basis::Y();
  PolyTable found;
  for (const auto& a : classes::quartic_labels()) {
    rep.run("quartics.Q" + a, [&] {
      DivisorClass c = classes::Q(a, y);
      auto ls = linear_system(c, cfg);
      Json w{{"class", c.to_string()}, {"dimension", ls.dimension()}};
      if (ls.dimension() != 1) return Outcome::of(false, w);
      auto bad = class_mismatches(ls.basis[0], c, cfg);
      w["mismatches"] = bad;
      found["f" + a] = ls.basis[0];
      return Outcome::of(bad.empty(), w);
    });
  }
  auto compare = [&](const std::string& id, const std::string& name, const std::string& kind,
                     Poly (*ref)(const Rational&, const Rational&, const Rational&)) {
    rep.run(id, [&] {
      if (cfg.name != kind) return Outcome::skip("reference form is written for placement " + kind);
      if (!found.count(name)) return Outcome::of(false, {{"error", "quartic not computed"}});
      Poly r = ref(cfg.param("a"), cfg.param("b"), cfg.param("c"));
      auto lam = proportionality(found[name], r);
      return Outcome::of(lam.has_value(), {{"terms", r.size()}, {"scalar", lam ? lam->get_str() : "none"}});
    });
  };
  compare("quartics.f0_reference", "f0", "B", &reference::quartic_f0);
  compare("quartics.f12_reference", "f12", "C", &reference::quartic_f12);
  compare("quartics.f24_reference", "f24", "C", &reference::quartic_f24);

  std::optional<Poly> section;
  rep.run("anticanonical.unique_section", [&] {
    auto ls = linear_system(classes::anticanonical(Basis::X()), cfg);
    Json w{{"dimension", ls.dimension()}};
    if (ls.dimension() != 1) return Outcome::of(false, w);
    section = ls.basis[0];
    if (cfg.name == "A") {
      auto basis = reference::anticanonical_basis();
      auto coef = express_in_span(*section, {basis.begin(), basis.end()});
      if (!coef) return Outcome::of(false, {{"dimension", 1}, {"error", "section outside the five-quartic span"}});
      // scale so the last coefficient matches the closed form
      auto want = reference::anticanonical_coefficients(cfg.param("A"), cfg.param("B"), cfg.param("C"));
      Rational s = want[4] / (*coef)[4];
      Json got = Json::array();
      bool ok = true;
      for (int i = 0; i < 5; ++i) {
        got.push_back(Rational((*coef)[i] * s).get_str());
        ok = ok && (*coef)[i] * s == want[i];
      }
      w["coefficients"] = got;
      return Outcome::of(ok, w);
    }
    return Outcome::of(true, w);
  });
  rep.run("anticanonical.nodes", [&] {
    if (!section) return Outcome::of(false, {{"error", "no section"}});
    std::vector<Poly> grad;
    for (int v = 0; v < 4; ++v) grad.push_back(section->derivative(v));
    for (std::size_t i = 0; i < 6; ++i)
      for (const auto& g : grad)
        if (g.eval(cfg[i]) != 0) return Outcome::of(false, {{"nonsingular_at", i}});
    auto pts = anticanonical_points(*section, cfg, 100, opt.seed);
    if (pts.size() < 100) return Outcome::of(false, {{"sampled", pts.size()}});
    for (const auto& p : pts) {
      bool zero = true;
      for (const auto& g : grad) zero = zero && g.eval(p) == 0;
      if (zero) return Outcome::of(false, {{"singular_point", point_json(p)}});
    }
    return Outcome::of(true, {{"smooth_samples", pts.size()}});
  });
  return rep;
}

// ---------------------------------------------------------------------------

inline Report poly_systems(const PointConfig& cfg, const PolyOptions& opt = {}) {
  Report rep = make_report("poly-systems", cfg, opt);
  Basis y = Basis::Y();
  auto dim = [&](const std::string& id, const DivisorClass& c, std::size_t want) {
    rep.run(id, [&] {
      auto ls = linear_system(c, cfg);
      return Outcome::of(ls.dimension() == want, {{"class", c.to_string()},
                                                  {"dimension", ls.dimension()},
                                                  {"constraint_rows", ls.constraint_rows},
                                                  {"primes", ls.primes_used}});
    });
  };
  dim("systems.D", classes::D(y), 4);
  dim("systems.D_dual", classes::D_dual(y), 4);
  dim("systems.D_minus_E4", classes::D(y) - DivisorClass::from_terms(y, {{"E4", 1}}), 3);
  for (const auto& q : classes::quintic_names()) dim("systems." + q, classes::quintic(q, y), 2);
  return rep;
}

// ---------------------------------------------------------------------------

inline Report poly_sections(const PointConfig& cfg, const PolyOptions& opt = {}) {
  Report rep = make_report("poly-sections", cfg, opt);
  Basis y = Basis::Y();
  std::optional<Sections> s;
  rep.run("sections.normalization", [&] {
    s = build_sections(cfg);
    Json scalars = Json::object();
    for (const auto& [n, f] : s->factored) scalars[n] = f.scalar.get_str();
    return Outcome::of(normalization_holds(*s), {{"scalars", scalars}});
  });
  if (!s) return rep;
  rep.run("sections.degrees", [&] {
    bool ok = true;
    for (const auto& [n, p] : s->expanded) ok = ok && p.degree() == 13 && p.is_homogeneous();
    return Outcome::of(ok);
  });
  rep.run("sections.complete_system", [&] {
    auto ls = linear_system(classes::D(y), cfg);
    if (ls.dimension() != 4) return Outcome::of(false, {{"dimension", ls.dimension()}});
    Json outside = Json::array();
    for (const auto& [n, p] : s->expanded)
      if (!express_in_span(p, ls.basis)) outside.push_back(n);
    std::size_t r = poly_rank(s->psi());
    return Outcome::of(outside.empty() && r == 4, {{"outside", outside}, {"rank_s0_s3", r}});
  });
  rep.run("sections.s0_along_l12", [&] {
    // The polynomial order exceeds the order of s0 as a section of D by the
    // E12 coefficient of D.
    int m = mult_along_line((*s)["s0"], cfg[1], cfg[2]);
    Rational from_class = -classes::D(y).coeff("E12");
    Rational section_order = Rational(m) - from_class;
    return Outcome::of(m == 2 && section_order == 1, {{"polynomial_order", m},
                                                      {"class_coefficient", io::to_json(from_class)},
                                                      {"section_order", io::to_json(section_order)}});
  });
  rep.run("sections.span_identities", [&] {
    Json bad = Json::array();
    for (const auto& c : span_checks())
      if (!span_check_holds(s->table, c)) bad.push_back(c.member);
    return Outcome::of(bad.empty(), {{"checked", span_checks().size()}, {"failed", bad}});
  });
  rep.run("pencils.classes", [&] {
    Json bad = Json::array();
    for (const auto& p : pencil_sections())
      if (pencil_section_class(p) != classes::quintic(p.quintic, y)) bad.push_back(p.quintic + "/f" + p.quartic);
    return Outcome::of(bad.empty(), {{"rows", pencil_sections().size()}, {"failed", bad}});
  });
  rep.run("pencils.dependence", [&] {
    Json bad = Json::array();
    std::map<std::string, LinearSystem> systems;
    for (const auto& q : classes::quintic_names()) systems[q] = linear_system(classes::quintic(q, y), cfg);
    for (const auto& p : pencil_sections()) {
      const auto& ls = systems.at(p.quintic);
      if (ls.dimension() != 2 || !express_in_span(pencil_section_poly(s->table, p), ls.basis))
        bad.push_back(p.quintic + "/f" + p.quartic);
    }
    return Outcome::of(bad.empty(), {{"failed", bad}});
  });
  return rep;
}

// ---------------------------------------------------------------------------

inline Report poly_jacobian(const PointConfig& cfg, const PolyOptions& opt = {}) {
  Report rep = make_report("poly-jacobian", cfg, opt);
  Sections s = build_sections(cfg);
  auto [lhs, rhs] = jacobian_identity(s);
  rep.run("jacobian.factorization.sample", [&] {
    auto r = identity_check(lhs, rhs, CheckMode::Sample, sample_options(opt, 1));
    return Outcome::of(r.holds, identity_json(r));
  });
  rep.run("jacobian.factorization.expand", [&] {
    if (opt.mode != CheckMode::Expand) return Outcome::skip("runs in expand mode only");
    Poly a = lhs.expand(), b = rhs.expand();
    auto lam = proportionality(a, b);
    return Outcome::of(lam.has_value() && a.degree() == 48,
                       {{"degree", a.degree()}, {"terms", a.size()}, {"scalar", lam ? lam->get_str() : "none"}});
  });
  rep.run("jacobian.lifted_maps", [&] {
    Basis y = Basis::Y();
    Json w = Json::object();
    bool ok = true;
    std::uint64_t stream = opt.seed * 7919;
    for (const auto& [alpha, ratios] : lifted_maps()) {
      auto xs = quartic_points(lookup(s.table, "f" + alpha), classes::Q(alpha, y), cfg, 6, ++stream);
      std::size_t nonzero = 0, tried = 0;
      for (const auto& x : xs) {
        if (tried == 3) break;
        try {
          Rational j = lifted_jacobian_at(s, alpha, x);
          ++tried;
          nonzero += j != 0;
        } catch (const std::domain_error&) {
        }
      }
      w["xi" + alpha] = {{"points", tried}, {"nonzero", nonzero}};
      ok = ok && tried > 0 && nonzero == tried;
    }
    return Outcome::of(ok, w);
  });
  return rep;
}

// ---------------------------------------------------------------------------

inline Json dual_json(const DualConfig& d) {
  Json pts = Json::array();
  for (const auto& p : d.q.points) pts.push_back(point_json(p));
  return pts;
}

inline Report poly_dual(const PointConfig& cfg, const PolyOptions& opt = {}) {
  Report rep = make_report("poly-dual", cfg, opt);
  Sections s = build_sections(cfg);
  DualConfig d = dual_config(cfg, s, opt.seed);
  rep.run("dual.contracted_points", [&] {
    const std::map<std::string, ProjPoint> want = {{"0", {0, 1, 0, 0}}, {"3", {0, 0, 0, 1}}, {"4", {0, 0, 1, 0}}};
    bool ok = true;
    Json w = Json::object();
    for (const auto& [a, p] : want) {
      bool same = same_projective_point(d.point_images.at(a), p);
      ok = ok && same && d.contracted_to_point.at(a);
      w["q" + a] = point_json(d.point_images.at(a));
    }
    return Outcome::of(ok, w);
  });
  rep.run("dual.line_images", [&] {
    bool ok = true;
    Json w = Json::object();
    for (const auto& [a, r] : d.line_fit_rank) {
      ok = ok && r == 2;
      w["l" + a] = r;
    }
    return Outcome::of(ok, {{"image_ranks", w}});
  });
  rep.run("dual.concurrency", [&] {
    bool ok = true;
    Json w = Json::object();
    for (const auto& [q, c] : d.concurrent) {
      ok = ok && c;
      w[q] = c;
    }
    return Outcome::of(ok, w);
  });
  rep.run("dual.genericity", [&] {
    auto v = genericity_violations(d.q);
    return Outcome::of(v.empty(), {{"points", dual_json(d)}, {"violations", v}});
  });
  rep.run("dual.projective_equivalence", [&] {
    if (!d.M_found) return Outcome::of(false, {{"error", "no projective equivalence"}});
    bool maps = true;
    for (std::size_t i = 0; i < 6; ++i) maps = maps && same_projective_point(d.M * cfg[i], d.q[i]);
    return Outcome::of(d.M_invertible && maps, {{"M", io::to_json(d.M)}, {"invertible", d.M_invertible}});
  });
  rep.run("dual.image_of_l14", [&] {
    // psi sends the line p1p4 into the line q0q2
    PointSampler rng(opt.seed + 17, 1000);
    std::size_t hits = 0, tried = 0;
    while (tried < 5) {
      Rational t = rng.integer();
      ProjPoint x(4);
      for (int c = 0; c < 4; ++c) x[c] = cfg[1][c] + t * cfg[4][c];
      ProjPoint img;
      try {
        img = psi_eval(x, s);
      } catch (const std::domain_error&) {
        continue;
      }
      ++tried;
      hits += on_line(img, {d.q[0], d.q[2]});
    }
    return Outcome::of(hits == tried, {{"samples", tried}});
  });
  return rep;
}

inline Report poly_fusion(const PointConfig& cfg, const PolyOptions& opt = {}) {
  Report rep = make_report("poly-fusion", cfg, opt);
  Sections s = build_sections(cfg);
  DualConfig d = dual_config(cfg, s, opt.seed);
  Basis y = Basis::Y();
  rep.run("fusion.dual_systems", [&] {
    Json w = Json::object();
    bool ok = true;
    for (const auto& b : classes::dual_quartic_labels()) {
      std::size_t dim = linear_system(classes::P(b, y), d.q).dimension();
      ok = ok && dim == 1;
      w["P" + b] = dim;
    }
    Json shown = Json::object();
    for (const char* b : {"1", "2", "5"})
      shown["P" + std::string(b)] = linear_system(classes::P_displayed(b, y), d.q).dimension();
    return Outcome::of(ok, {{"dimensions", w}, {"displayed_variant_dimensions", shown}});
  });
  DualSide ds = build_dual_side(d.q);
  std::uint64_t stream = 100;
  for (const auto& b : classes::dual_quartic_labels()) {
    rep.run("fusion.P" + b, [&] {
      auto [l, r] = fusion_identity(s, ds, b);
      auto res = identity_check(l, r, opt.mode, sample_options(opt, ++stream));
      Json w = identity_json(res);
      Json ex = Json::object();
      for (const auto& a : classes::quartic_labels())
        if (long m = classes::fusion_exponent(a, b)) ex["f" + a] = m;
      w["exponents"] = ex;
      return Outcome::of(res.holds, w);
    });
  }
  for (const auto& pf : plane_fusions()) {
    rep.run("planefusion." + pf.dual_plane, [&] {
      auto [l, r] = plane_fusion_identity(s, ds, pf);
      auto res = identity_check(l, r, opt.mode, sample_options(opt, ++stream));
      return Outcome::of(res.holds, identity_json(res));
    });
  }
  rep.run("composite.linear", [&] {
    auto cl = composite_linearity(s, ds, opt.seed);
    return Outcome::of(cl.linear && cl.invertible, {{"fit_samples", cl.fit_samples},
                                                    {"check_samples", cl.check_samples},
                                                    {"M", io::to_json(cl.M)},
                                                    {"invertible", cl.invertible}});
  });
  return rep;
}

// ---------------------------------------------------------------------------

inline Report poly_rnc(const PointConfig& cfg, const PolyOptions& opt = {}) {
  Report rep = make_report("poly-rnc", cfg, opt);
  if (cfg.name != "D") {
    rep.record("rnc.placement", Outcome::of(false, {{"error", "the normal-curve suite needs placement D"}}));
    return rep;
  }
  Sections s = build_sections(cfg);
  RncResult r = rnc_restrict(cfg, s.table);
  for (const auto& row : r.rows) {
    Json w{{"divides", row.divides}, {"residual_degree", row.residual_degree}};
    if (row.parameter) w["parameter"] = row.parameter->get_str();
    rep.record("rnc." + row.name, Outcome::of(row.matches, w));
  }
  rep.record("rnc.alpha_formula", Outcome::of(r.alpha_matches, {{"alpha", r.alpha.get_str()},
                                                                 {"formula", r.alpha_formula.get_str()},
                                                                 {"beta", r.beta.get_str()},
                                                                 {"gamma", r.gamma.get_str()}}));
  rep.record("rnc.alpha_forbidden_values", Outcome::of(r.alpha_avoids_forbidden));
  rep.record("rnc.through_points", Outcome::of(r.through_points));
  rep.run("rnc.image_curve", [&] {
    auto ic = rnc_image_check(cfg, s, r, opt.seed, opt.samples);
    return Outcome::of(ic.holds, {{"samples", ic.samples}, {"diagonal", io::to_json(ic.diagonal)}});
  });
  return rep;
}

// ---------------------------------------------------------------------------

/// Triangle, [1:1:1] and two points drawn from the seed, redrawn until the
/// hypotheses hold.
inline std::vector<ProjPoint> del3_points(std::uint64_t seed) {
  PolySampler ps(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    auto u = ps.point(2, 9), v = ps.point(2, 9);
    std::vector<ProjPoint> pts = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, u[0], u[1]}, {1, v[0], v[1]}};
    if (planar_quartic_dim(pts).violations.empty()) return pts;
  }
  throw std::runtime_error("no admissible planar points");
}

inline Report poly_e4(const PointConfig& cfg, const PolyOptions& opt = {}) {
  Report rep = make_report("poly-e4", cfg, opt);
  auto del3 = [&] {
    rep.run("del3.dimension", [&] {
      auto pts = del3_points(opt.seed);
      auto r = planar_quartic_dim(pts);
      Json p = Json::array();
      for (const auto& x : pts) p.push_back(io::to_json(x));
      return Outcome::of(r.violations.empty() && r.dimension == 2 && r.minor_246 != 0,
                         {{"points", p}, {"dimension", r.dimension}, {"minor", r.minor_246.get_str()}});
    });
    rep.run("del3.conic_violation", [&] {
      auto r = planar_quartic_dim({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 3, -3}, {1, 4, -2}});
      bool flagged = r.violations.size() == 1 && r.violations[0].rfind("clause 3", 0) == 0;
      return Outcome::of(flagged, {{"violations", r.violations}});
    });
  };
  if (cfg.name != "C") {
    rep.record("e4.placement", Outcome::skip("exceptional-plane checks are written for placement C"));
    del3();
    return rep;
  }
  const Rational a = cfg.param("a"), b = cfg.param("b"), c = cfg.param("c");
  PolyTable t = build_quartics(cfg);
  add_planes(t, cfg);
  Poly h12 = restrict_to_exceptional(t.at("f12"), cfg[4]);
  Poly h24 = restrict_to_exceptional(t.at("f24"), cfg[4]);
  rep.run("e4.h12", [&] {
    auto lam = proportionality(h12, conic_h12(a, b, c));
    return Outcome::of(lam.has_value(), {{"restriction", io::to_json(h12)}});
  });
  rep.run("e4.h24", [&] {
    auto lam = proportionality(h24, conic_h24(a, b, c));
    return Outcome::of(lam.has_value(), {{"restriction", io::to_json(h24)}});
  });
  rep.run("e4.common_point", [&] {
    auto p1 = second_point_on_line(h12, a, b), p2 = second_point_on_line(h24, a, b);
    ProjPoint want = expected_ypoint(a, b, c);
    bool ok = p1 && p2 && same_projective_point(*p1, want) && same_projective_point(*p2, want);
    return Outcome::of(ok, {{"expected", io::to_json(want)},
                            {"on_h12", p1 ? io::to_json(*p1) : Json()},
                            {"on_h24", p2 ? io::to_json(*p2) : Json()}});
  });
  rep.run("e4.r_point", [&] {
    std::vector<Rational> r = {1, 0, 1};
    bool on12 = h12.eval(r) == 0, on24 = h24.eval(r) == 0;
    return Outcome::of(on12 && !on24, {{"on_h12", on12}, {"on_h24", on24}});
  });
  rep.run("e4.multiplicity_s0pp", [&] {
    int m = mult_at_point(t.at("p245") * t.at("f12") * t.at("f3") * t.at("f13"), cfg[4]);
    Json parts = Json::array();
    for (const char* n : {"p245", "f12", "f3", "f13"}) parts.push_back(mult_at_point(t.at(n), cfg[4]));
    return Outcome::of(m == 6, {{"multiplicity", m}, {"factors", parts}});
  });
  del3();
  return rep;
}

// ---------------------------------------------------------------------------

inline Report properties(std::uint64_t seed, std::size_t count = 100) {
  Report rep;
  rep.suite = "properties";
  rep.seed = seed;
  rep.info = {{"instances", count}};
  auto prop = [&](const std::string& id, bool (*fn)(std::uint64_t)) {
    rep.run(id, [&] {
      Json failed = Json::array();
      for (std::size_t i = 0; i < count; ++i) {
        std::uint64_t s = seed * 100003ULL + i;
        if (!fn(s)) failed.push_back(s);
      }
      return Outcome::of(failed.empty(), {{"instances", count}, {"failed_seeds", failed}});
    });
  };
  prop("property.jacobian_divisibility", [](std::uint64_t s) { return detn_instance(s); });
  prop("property.bordered_jacobian", &fakejac_instance);
  prop("property.quotient_jacobians", &imagesjac_instance);
  prop("property.euler_relation", &euler_instance);
  return rep;
}

}  // namespace cremona::suites
