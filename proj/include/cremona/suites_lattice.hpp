#pragma once

// Lattice-level suites: finite geometry of A[2], the NS lattice identities,
// the isometries and the family F_k.

#include "cremona/isometry.hpp"
#include "cremona/nskummer.hpp"
#include "cremona/picard.hpp"
#include "cremona/report.hpp"
#include "cremona/twotorsion.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

namespace cremona::suites {

using io::Json;

inline Json set_json(twotorsion::PointSet s) {
  Json a = Json::array();
  for (int p : twotorsion::members(s)) a.push_back(twotorsion::label(p));
  return a;
}

inline twotorsion::PointSet set_from_labels(const std::vector<std::string>& labels) {
  std::vector<int> pts;
  for (const auto& l : labels) pts.push_back(twotorsion::from_label(l));
  return twotorsion::make_set(pts);
}

// ---------------------------------------------------------------------------

inline Report hexads() {
  using namespace twotorsion;
  Report rep;
  rep.suite = "hexads";
  const FlatEnumeration e = enumerate_flats();
  rep.run("flats.hyperplane_count", [&] {
    return Outcome::of(e.hyperplanes.size() == 30, {{"count", e.hyperplanes.size()}});
  });
  rep.run("flats.plane_count", [&] { return Outcome::of(e.planes.size() == 140, {{"count", e.planes.size()}}); });
  rep.run("flats.gopel_rosenhain_count", [&] {
    return Outcome::of(e.gopel.size() == 60 && e.rosenhain.size() == 80,
                       {{"gopel", e.gopel.size()}, {"rosenhain", e.rosenhain.size()}});
  });
  rep.run("hexads.weber_count", [&] {
    bool sizes = std::all_of(e.weber.begin(), e.weber.end(),
                             [](PointSet s) { return std::popcount(static_cast<unsigned>(s)) == 6; });
    return Outcome::of(e.weber.size() == 192 && sizes, {{"count", e.weber.size()}, {"all_size_six", sizes}});
  });
  const PointSet h1 = set_from_labels({"0", "14", "15", "23", "25", "34"});
  const PointSet h = set_from_labels({"5", "23", "1", "14", "2", "12"});
  rep.run("hexads.reference_members", [&] {
    bool t5 = translate(h1, from_label("5")) == h;
    return Outcome::of(is_weber(e, h1) && is_weber(e, h) && t5,
                       {{"H1", set_json(h1)}, {"t5(H1)", set_json(translate(h1, from_label("5")))},
                        {"H1_is_weber", is_weber(e, h1)}, {"H_is_weber", is_weber(e, h)}});
  });
  rep.run("hexads.point_indices_set", [&] {
    // reported either way; no expectation is attached
    PointSet s = set_from_labels({"0", "1", "2", "3", "4", "5"});
    return Outcome{Status::Pass, {{"is_weber", is_weber(e, s)}}};
  });
  rep.run("hexads.translation_permutes", [&] {
    std::set<PointSet> all(e.weber.begin(), e.weber.end());
    for (int a = 0; a < kPoints; ++a) {
      std::set<PointSet> img;
      for (PointSet s : e.weber) img.insert(translate(s, a));
      if (img != all) return Outcome::of(false, {{"translation", label(a)}});
    }
    return Outcome::of(true);
  });
  rep.run("flats.hyperplane_families", [&] {
    std::set<PointSet> fam;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) {
        auto [g, gc] = pair_hyperplanes(i, j);
        fam.insert(g);
        fam.insert(gc);
      }
    std::set<PointSet> enumerated(e.hyperplanes.begin(), e.hyperplanes.end());
    return Outcome::of(fam == enumerated, {{"family_size", fam.size()}});
  });
  rep.run("flats.plane_families", [&] {
    auto fam = plane_families();
    std::set<PointSet> uni;
    std::size_t total = 0;
    Json sizes = Json::array();
    for (const auto& f : fam) {
      total += f.size();
      sizes.push_back(f.size());
      uni.insert(f.begin(), f.end());
    }
    std::set<PointSet> enumerated(e.planes.begin(), e.planes.end());
    return Outcome::of(total == 140 && uni == enumerated, {{"family_sizes", sizes}, {"sum", total}});
  });
  rep.run("flats.planes_through_zero", [&] {
    for (PointSet s : e.planes) {
      if (!(s & 1u)) continue;
      auto m = members(s);
      if (add(m[1], m[2]) != m[3]) return Outcome::of(false, {{"plane", set_json(s)}});
    }
    return Outcome::of(true);
  });
  rep.run("pairing.nondegenerate", [&] {
    for (int v = 1; v < kPoints; ++v) {
      bool hit = false;
      for (int w = 0; w < kPoints; ++w) hit = hit || pairing(v, w);
      if (!hit || pairing(v, v)) return Outcome::of(false, {{"vector", label(v)}});
    }
    for (int a = 0; a < kPoints; ++a)
      for (int b = 0; b < kPoints; ++b)
        for (int c = 0; c < kPoints; ++c)
          if (pairing(add(a, b), c) != (pairing(a, c) ^ pairing(b, c))) return Outcome::of(false);
    return Outcome::of(true);
  });
  return rep;
}

// ---------------------------------------------------------------------------
// Products among H_S, E_i, T_ij, L_ijk and R.

namespace detail {

struct NamedNS {
  std::string name;
  char kind;             // 'H', 'E', 'T', 'L', 'R'
  std::vector<int> idx;  // indices as written
  NSClass value;
};

inline std::vector<NamedNS> latticeS_classes() {
  std::vector<NamedNS> v;
  v.push_back({"H_S", 'H', {}, ns::H_S()});
  for (int i = 0; i < 6; ++i) v.push_back({"E" + std::to_string(i), 'E', {i}, ns::E(i)});
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) v.push_back({"T" + std::to_string(i) + std::to_string(j), 'T', {i, j}, ns::T(i, j)});
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k)
        v.push_back({"L" + std::to_string(i) + std::to_string(j) + std::to_string(k), 'L', {i, j, k}, ns::L(i, j, k)});
  v.push_back({"R", 'R', {}, ns::R()});
  return v;
}

inline bool contains(const std::vector<int>& big, const std::vector<int>& small) {
  return std::all_of(small.begin(), small.end(),
                     [&](int x) { return std::find(big.begin(), big.end(), x) != big.end(); });
}

inline std::vector<int> complement6(const std::vector<int>& s) {
  std::vector<int> out;
  for (int t = 0; t < 6; ++t)
    if (std::find(s.begin(), s.end(), t) == s.end()) out.push_back(t);
  return out;
}

/// Expected product from the combinatorial rules alone.
inline int expected_product(const NamedNS& a, const NamedNS& b) {
  const NamedNS* x = &a;
  const NamedNS* y = &b;
  static const std::string order = "HETLR";
  if (order.find(x->kind) > order.find(y->kind)) std::swap(x, y);
  const char p = x->kind, q = y->kind;
  if (p == q) {
    if (p == 'H') return 4;
    if (p == 'R') return -2;
    if (p == 'L') return (x->idx == y->idx || x->idx == complement6(y->idx)) ? -2 : 0;
    return x->idx == y->idx ? -2 : 0;
  }
  if (p == 'H') {
    switch (q) {
      case 'E': return 0;
      case 'T': return 1;
      case 'L': return 1;
      case 'R': return 3;
    }
  }
  if (p == 'E' && q == 'T') return contains(y->idx, x->idx) ? 1 : 0;
  if (p == 'E' && q == 'R') return 1;
  if (p == 'T' && q == 'L')
    return contains(y->idx, x->idx) || contains(complement6(y->idx), x->idx) ? 1 : 0;
  return 0;
}

}  // namespace detail

inline void lattice_identity_checks(Report& rep) {
  rep.run("gram.latticeS_products", [] {
    auto cls = detail::latticeS_classes();
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (std::size_t j = i; j < cls.size(); ++j) {
        ++pairs;
        Rational got = gram(cls[i].value, cls[j].value);
        int want = detail::expected_product(cls[i], cls[j]);
        if (got != want)
          return Outcome::of(false, {{"pair", {cls[i].name, cls[j].name}}, {"got", got.get_str()}, {"want", want}});
      }
    return Outcome::of(true, {{"pairs", pairs}});
  });
  rep.run("gram.lambda_products", [] {
    NSClass lam = NSClass::lambda();
    bool ok = gram(lam, lam) == 4 && gram(lam, ns::H_S()) == 6;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) ok = ok && gram(lam, ns::T(i, j)) == 2;
    return Outcome::of(ok, {{"Lambda.H_S", gram(lam, ns::H_S()).get_str()}, {"Lambda.T01", gram(lam, ns::T(0, 1)).get_str()}});
  });
  rep.run("gram.rel4_all_triples", [] {
    std::size_t n = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k) {
          ++n;
          NSClass rhs = ns::E(i) + ns::E(j) + ns::E(k) + ns::T(i, j) + ns::T(j, k) + ns::T(i, k) + ns::L(i, j, k);
          if (rhs != ns::H_S())
            return Outcome::of(false, {{"triple", {i, j, k}}, {"rhs", rhs.to_string()}});
        }
    return Outcome::of(n == 20, {{"triples", n}});
  });
  rep.run("gram.three_lambda_decomposition", [] {
    NSClass lines;
    for (int j = 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) lines += ns::L(0, j, k);
    NSClass sum = ns::H_S() * 2 + lines;
    return Outcome::of(sum == NSClass::lambda() * 3 && gram(sum, sum) == 36,
                       {{"lhs", sum.to_string()}, {"square", gram(sum, sum).get_str()}});
  });
  rep.run("gram.a01_decomposition", [] {
    NSClass a = ns::A(0, 1);
    NSClass rhs = ns::E(2) + ns::L(0, 1, 2) + ns::T(0, 2) + ns::T(1, 2);
    return Outcome::of(a == rhs && gram(a, a) == 0, {{"A01", a.to_string()}, {"square", gram(a, a).get_str()}});
  });
  rep.run("gram.trope_incidence", [] {
    auto t = trope_incidence();
    std::array<int, twotorsion::kPoints> cols{};
    bool ok = true;
    for (const auto& row : t.table) {
      int s = 0;
      for (int p = 0; p < twotorsion::kPoints; ++p) {
        s += row[p];
        cols[p] += row[p];
      }
      ok = ok && s == 6;
    }
    for (int c : cols) ok = ok && c == 6;
    Json t01 = Json::array();
    for (int p = 0; p < twotorsion::kPoints; ++p)
      if (t.table[0][p]) t01.push_back(twotorsion::label(p));
    return Outcome::of(ok, {{"T01_nodes", t01}});
  });
}

// ---------------------------------------------------------------------------

inline void class_checks(Report& rep) {
  Basis y = Basis::Y();
  rep.run("classes.dual_exponent_sums", [&] {
    Json sums = Json::object();
    bool ok = true;
    for (const auto& b : classes::dual_quartic_labels()) {
      long s = 0;
      for (const auto& a : classes::quartic_labels()) s += classes::fusion_exponent(a, b);
      sums[b] = s;
      ok = ok && s == 13;
    }
    return Outcome::of(ok, {{"sums", sums}});
  });
  rep.run("classes.index_switch", [&] {
    bool d = permute(classes::D(y), kDualSwap) == classes::D_dual(y);
    std::set<DivisorClass> qs, ps;
    for (const auto& a : classes::quartic_labels()) qs.insert(permute(classes::Q(a, y), kDualSwap));
    for (const auto& b : classes::dual_quartic_labels()) ps.insert(classes::P(b, y));
    Json displayed = Json::array();
    for (const auto& b : classes::dual_quartic_labels())
      if (classes::P_displayed(b, y) != classes::P(b, y))
        displayed.push_back({{"beta", b},
                             {"displayed", classes::P_displayed(b, y).to_string()},
                             {"switched", classes::P(b, y).to_string()}});
    return Outcome::of(d && qs == ps, {{"D_to_D'", d}, {"displayed_differs", displayed}});
  });
  rep.run("classes.s3_orbits", [&] {
    bool fixed = s3_orbit(classes::D(y)).size() == 1 && s3_orbit(classes::A(y)).size() == 1;
    std::set<DivisorClass> q0 = s3_orbit(classes::Q("0", y));
    std::set<DivisorClass> want = {classes::Q("0", y), classes::Q("3", y), classes::Q("4", y)};
    bool group = true;
    for (const auto& g : s3_elements()) {
      auto g2 = compose(g, g), g3 = compose(g2, g);
      bool id2 = true, id3 = true;
      for (int i = 0; i < 6; ++i) {
        id2 = id2 && g2[i] == i;
        id3 = id3 && g3[i] == i;
      }
      group = group && (id2 || id3);
    }
    return Outcome::of(fixed && q0 == want && group, {{"D_and_A_fixed", fixed}, {"Q0_orbit", q0.size()}});
  });
  rep.run("classes.restriction_kernel_degree", [] {
    auto ker = nullspace(restriction_matrix(Basis::X()));
    for (const auto& v : ker)
      if (v[0] != 0) return Outcome::of(false);
    return Outcome::of(true, {{"kernel_dimension", ker.size()}});
  });
  rep.run("classes.restriction_examples", [&] {
    Basis x = Basis::X();
    LatticeMap k = keum_matrix();
    bool q0 = restrict(classes::Q("0", y)) == ns::U() - ns::named("N12");
    bool d = restrict(classes::D(y)) == apply(k, ns::H_S());
    bool t12 = restrict(classes::Q("12", y)) == apply(k, ns::T(1, 2));
    return Outcome::of(q0 && d && t12, {{"r(Q0)", restrict(classes::Q("0", y)).to_string()}});
  });
}

// ---------------------------------------------------------------------------

inline void isometry_checks(Report& rep, const LatticeMap& eta) {
  const LatticeMap kappa = keum_matrix();
  const Basis x = Basis::X();
  rep.run("isometry.kappa_preserves_gram", [&] {
    return Outcome::of(preserves_gram(kappa), {{"variant_H1_preserves", preserves_gram(keum_matrix(HexadVariant::H1))}});
  });
  rep.run("isometry.kappa_node_images", [&] {
    for (int p = 0; p < twotorsion::kPoints; ++p) {
      NSClass img = apply(kappa, NSClass::node(p));
      if (gram(img, img) != -2) return Outcome::of(false, {{"node", twotorsion::label(p)}});
    }
    bool n5 = apply(kappa, ns::named("N5")) == ns::named("N0");
    bool sq = apply(kappa, apply(kappa, ns::named("N25"))) == ns::named("N24");
    NSClass kl = apply(kappa, NSClass::lambda());
    return Outcome::of(n5 && sq && gram(kl, kl) == 4, {{"kappa(Lambda)", kl.to_string()}});
  });
  rep.run("isometry.kappa_fixes_R", [&] { return Outcome::of(apply(kappa, ns::R()) == ns::R()); });
  rep.run("isometry.kappa_fixes_G", [&] { return Outcome::of(apply(kappa, ns::G()) == ns::G()); });
  rep.run("isometry.intertwining", [&] {
    auto [lhs, rhs] = intertwining_sides(eta, kappa);
    Json bad = Json::array();
    for (std::size_t c = 0; c < lhs.cols(); ++c)
      if (lhs.col(c) != rhs.col(c)) bad.push_back(x.generators()[c]);
    return Outcome::of(bad.empty(), {{"mismatched_columns", bad}});
  });
  rep.run("isometry.eta_fixes_anticanonical", [&] {
    DivisorClass k = classes::anticanonical(x);
    return Outcome::of(apply(eta, k) == k);
  });
  rep.run("isometry.eta_inverse_of_H", [&] {
    auto inv = inverse(eta.matrix);
    if (!inv) return Outcome::of(false, {{"error", "eta is singular"}});
    DivisorClass img = DivisorClass(x, *inv * DivisorClass::from_terms(x, {{"H", 1}}).coeffs());
    bool integral = true;
    for (std::size_t r = 0; r < inv->rows(); ++r)
      for (std::size_t c = 0; c < inv->cols(); ++c) integral = integral && (*inv)(r, c).get_den() == 1;
    bool back = apply(LatticeMap{"X", "X", *inv}, DivisorClass::from_terms(x, {{"E15", 1}})) ==
                DivisorClass::from_terms(x, {{"E03", 1}});
    return Outcome::of(img == classes::D_dual(Basis::Y()).in_basis(x) && integral && back,
                       {{"image", img.to_string()}, {"integral_inverse", integral}});
  });
}

/// Gram identities, half-class scan and the isometries. A replacement eta can
/// be injected to exercise the failure path.
inline Report verify_lattice(const LatticeMap& eta = eta_matrix()) {
  Report rep;
  rep.suite = "verify-lattice";
  lattice_identity_checks(rep);
  class_checks(rep);
  rep.run("lattice.rank", [] {
    auto lat = build_ns_lattice();
    return Outcome::of(lattice_rank(lat) == 17,
                       {{"rank", lattice_rank(lat)}, {"discriminant", lattice_discriminant(lat).get_str()}});
  });
  rep.run("lattice.half_subset_scan", [] {
    auto lat = build_ns_lattice();
    auto found = half_subset_scan(lat);
    auto flats = twotorsion::enumerate_flats();
    std::set<twotorsion::PointSet> want(flats.hyperplanes.begin(), flats.hyperplanes.end());
    want.insert(0);
    want.insert(0xffff);
    std::set<twotorsion::PointSet> got(found.begin(), found.end());
    return Outcome::of(got == want && found.size() == 32, {{"count", found.size()}});
  });
  rep.run("lattice.membership_examples", [] {
    auto lat = build_ns_lattice();
    auto [g01, g01c] = twotorsion::pair_hyperplanes(0, 1);
    bool half_g = lattice_member(ns::sum_nodes(g01) * Rational(1, 2), lat);
    bool half_gc = lattice_member(ns::sum_nodes(g01c) * Rational(1, 2), lat);
    bool pair = lattice_member((ns::E(0) + ns::E(1)) * Rational(1, 2), lat);
    bool lam = lattice_member(NSClass::lambda(), lat);
    return Outcome::of(half_g && half_gc && !pair && lam, {{"half_N0_plus_N1", pair}});
  });
  isometry_checks(rep, eta);
  return rep;
}

// ---------------------------------------------------------------------------

inline Report iterate(int k_max, int order_n = 100) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  Report rep;
  rep.suite = "iterate";
  rep.info = {{"k_max", k_max}, {"order_n", order_n}};
  const Basis x = Basis::X();
  std::vector<DivisorClass> fs;
  rep.run("family.matrix_powers", [&] {
    fs = iterate_F_all(k_max);
    return Outcome::of(fs.size() == static_cast<std::size_t>(k_max) &&
                           fs[0] == DivisorClass::from_terms(x, {{"E15", 1}}),
                       {{"F1", fs[0].to_string()}});
  });
  rep.run("family.closed_form", [&] {
    for (int k = 1; k <= k_max; ++k)
      if (closed_form_F(k) != fs.at(k - 1))
        return Outcome::of(false, {{"k", k}, {"power", fs[k - 1].to_string()}, {"closed", closed_form_F(k).to_string()}});
    return Outcome::of(true, {{"checked", k_max}});
  });
  rep.run("family.closed_form_boundary", [&] {
    // the table value m_0 = -1 and the convention m_0 = 0 both reported
    DivisorClass table = closed_form_F(1);
    DivisorClass zero = closed_form_F(1, Integer(0));
    bool ok = table == fs.at(0);
    return Outcome::of(ok, {{"m0_from_table", fk_coefficients(0).m.get_str()},
                            {"with_table_m0", table.to_string()},
                            {"with_m0_zero", zero.to_string()},
                            {"m0_zero_matches", zero == fs.at(0)}});
  });
  rep.run("family.degrees", [&] {
    for (int k = 1; k <= k_max; ++k) {
      Integer kk = k;
      const auto& f = fs.at(k - 1);
      if (f.degree() != Rational(2 * kk * (kk - 1))) return Outcome::of(false, {{"k", k}});
      for (int i = 0; i < 6; ++i)
        if (f.coeff("E" + std::to_string(i)) != Rational(-kk * (kk - 1))) return Outcome::of(false, {{"k", k}});
    }
    return Outcome::of(true, {{"degree_at_k_max", fs.back().degree().get_str()}});
  });
  rep.run("family.pairwise_nonproportional", [&] {
    if (k_max < 2) return Outcome::skip("needs at least two classes");
    auto p = first_proportional_pair(fs);
    if (p) return Outcome::of(false, {{"pair", {p->first, p->second}}});
    bool control = proportional(fs[0], fs[0] * Rational(2));
    return Outcome::of(control, {{"pairs", static_cast<long>(k_max) * (k_max - 1) / 2}});
  });
  rep.run("family.infinite_order", [&] {
    auto ev = order_evidence(order_n);
    Json growth = Json::array();
    for (int n : {1, 2, 5, 10, 20, 50, 100})
      if (n <= order_n) growth.push_back({{"n", n}, {"max_entry", ev.eta_max_entry[n - 1].get_str()}});
    Json cp = Json::array();
    for (const auto& c : ev.eta_charpoly) cp.push_back(c.get_str());
    return Outcome::of(!ev.kappa_power_identity && !ev.eta_power_identity,
                       {{"checked", ev.checked}, {"eta_entry_growth", growth}, {"eta_charpoly", cp}});
  });
  rep.table_header = {"k", "degree"};
  for (const auto& g : x.generators()) rep.table_header.push_back(g);
  for (std::size_t k = 0; k < fs.size(); ++k) {
    std::vector<std::string> row = {std::to_string(k + 1), fs[k].degree().get_str()};
    for (const auto& c : fs[k].coeffs()) row.push_back(c.get_str());
    rep.table.push_back(row);
  }
  return rep;
}

}  // namespace cremona::suites
