#include "cremona/suites.hpp"

#include <gtest/gtest.h>

using namespace cremona;

namespace {

PointConfig fixture(const std::string& name) { return io::load_config(std::string(CREMONA_CONFIG_DIR) + "/" + name + ".json"); }

ProjPoint pt(long a, long b, long c, long d) { return {Rational(a), Rational(b), Rational(c), Rational(d)}; }

const Sections& sections_e() {
  static const Sections s = build_sections(fixture("E"));
  return s;
}

}  // namespace

TEST(Sections, DegreesAndIndependence) {
  const Sections& s = sections_e();
  for (const char* n : {"s0", "s1", "s2", "s3", "s1'", "s2'", "s3'", "s0''", "s3''"}) EXPECT_EQ(s[n].degree(), 13) << n;
  EXPECT_EQ(poly_rank(s.psi()), 4u);
}

TEST(Sections, Normalization) {
  const Sections& s = sections_e();
  EXPECT_TRUE(normalization_holds(s));
  EXPECT_EQ(s["s1"] - s["s1'"], s["s0"]);
  EXPECT_EQ(s["s2"] - s["s2'"], s["s0"]);
  EXPECT_EQ(s["s3"] - s["s3'"], s["s0"]);
}

TEST(Psi, ContractsQ0ToAPoint) {
  PointConfig cfg = fixture("E");
  const Sections& s = sections_e();
  auto xs = quartic_points(lookup(s.table, "f0"), classes::Q("0", Basis::Y()), cfg, 4, 3);
  ASSERT_FALSE(xs.empty());
  for (const auto& x : xs) EXPECT_TRUE(same_projective_point(psi_eval(x, s), pt(0, 1, 0, 0)));
}

TEST(Psi, MapsQ05IntoALine) {
  PointConfig cfg = fixture("E");
  const Sections& s = sections_e();
  auto xs = quartic_points(lookup(s.table, "f05"), classes::Q("05", Basis::Y()), cfg, 4, 5);
  ASSERT_FALSE(xs.empty());
  for (const auto& x : xs) {
    ProjPoint y = psi_eval(x, s);
    EXPECT_EQ(y[0], y[2]);
    EXPECT_EQ(y[3], 0);
  }
}

TEST(Dual, ConfigurationOnD) {
  PointConfig cfg = fixture("D");
  Sections s = build_sections(cfg);
  DualConfig d = dual_config(cfg, s, 1);
  EXPECT_TRUE(same_projective_point(d.q[0], pt(0, 1, 0, 0)));
  EXPECT_TRUE(same_projective_point(d.q[3], pt(0, 0, 0, 1)));
  EXPECT_TRUE(same_projective_point(d.q[4], pt(0, 0, 1, 0)));
  for (const char* q : {"q1", "q2", "q5"}) EXPECT_TRUE(d.concurrent.at(q)) << q;
  ASSERT_TRUE(d.M_found);
  EXPECT_TRUE(d.M_invertible);
  // checked directly: M p_i is a multiple of q_i
  for (int i = 0; i < 6; ++i) EXPECT_TRUE(same_projective_point(d.M * cfg[i], d.q[i])) << i;
  EXPECT_TRUE(genericity_violations(d.q).empty());
}

TEST(Fusion, Beta05) {
  PointConfig cfg = fixture("E");
  const Sections& s = sections_e();
  DualSide d = build_dual_side(dual_config(cfg, s, 1).q);
  auto [lhs, rhs] = fusion_identity(s, d, "05");
  EXPECT_TRUE(identity_check(lhs, rhs, CheckMode::Sample).holds);
}

TEST(Fusion, AllPlaneDisplays) {
  PointConfig cfg = fixture("E");
  const Sections& s = sections_e();
  DualSide d = build_dual_side(dual_config(cfg, s, 1).q);
  for (const auto& pf : plane_fusions()) {
    auto [lhs, rhs] = plane_fusion_identity(s, d, pf);
    EXPECT_TRUE(identity_check(lhs, rhs, CheckMode::Sample).holds);
  }
}

TEST(Jacobian, ExpandedFactorization) {
  const Sections& s = sections_e();
  auto [lhs, rhs] = jacobian_identity(s);
  Poly det = lhs.expand();
  EXPECT_EQ(det.degree(), 48);
  auto r = identity_check(lhs, rhs, CheckMode::Expand);
  EXPECT_TRUE(r.holds);
  auto sampled = identity_check(lhs, rhs, CheckMode::Sample);
  EXPECT_TRUE(sampled.holds);
  EXPECT_EQ(sampled.scalar, r.scalar);
}

TEST(Composite, LinearWithInvertibleMatrix) {
  PointConfig cfg = fixture("E");
  const Sections& s = sections_e();
  DualSide d = build_dual_side(dual_config(cfg, s, 1).q);
  auto c = composite_linearity(s, d, 1);
  EXPECT_TRUE(c.linear);
  EXPECT_TRUE(c.invertible);
  EXPECT_NE(det(c.M), 0);
}

TEST(Rnc, AlphaOnD) {
  PointConfig cfg = fixture("D");
  Sections s = build_sections(cfg);
  RncResult r = rnc_restrict(cfg, s.table);
  Rational a = cfg.param("a"), b = cfg.param("b"), c = cfg.param("c");
  Rational want = (c - 1) * (b - a) / ((b - 1) * (c - a));
  EXPECT_EQ(want, Rational(3, 5));
  EXPECT_EQ(r.alpha, want);
  EXPECT_EQ(r.beta, Rational(-3, 5));
  EXPECT_EQ(r.gamma, Rational(9, 25));
  EXPECT_TRUE(r.all_match());
  EXPECT_TRUE(rnc_image_check(cfg, s, r, 1, 10).holds);
}

TEST(Suites, RejectDegenerateConfigs) {
  PointConfig bad = fixture("E");
  bad.points[5] = bad.points[4];
  EXPECT_THROW(suites::run_poly("quartics", bad, {}), std::invalid_argument);
  EXPECT_THROW(suites::run_poly("nope", fixture("E"), {}), std::invalid_argument);
}

TEST(Suites, DualReportCarriesWitness) {
  Report rep = suites::run_poly("dual", fixture("D"), {});
  EXPECT_TRUE(rep.all_passed());
  const CheckRecord* m = rep.find("dual.projective_equivalence");
  ASSERT_NE(m, nullptr);
  EXPECT_EQ(m->witness["M"].size(), 4u);
}

TEST(Suites, QuarticsOnB) {
  Report rep = suites::run_poly("quartics", fixture("B"), {});
  EXPECT_TRUE(rep.all_passed());
  int q = 0;
  for (const auto& c : rep.checks) q += c.id.rfind("quartics.Q", 0) == 0 && c.status == Status::Pass;
  EXPECT_EQ(q, 9);
}
