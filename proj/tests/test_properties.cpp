#include "cremona/suites.hpp"

#include <gtest/gtest.h>

using namespace cremona;

namespace {

PointConfig fixture(const std::string& name) { return io::load_config(std::string(CREMONA_CONFIG_DIR) + "/" + name + ".json"); }

std::vector<ProjPoint> planar(std::vector<std::array<long, 3>> raw) {
  std::vector<ProjPoint> out;
  for (const auto& r : raw) out.push_back({Rational(r[0]), Rational(r[1]), Rational(r[2])});
  return out;
}

}  // namespace

TEST(Property, JacobianDivisibility) {
  for (std::uint64_t s = 1; s <= 20; ++s) EXPECT_TRUE(detn_instance(s)) << s;
}

TEST(Property, BorderedJacobian) {
  for (std::uint64_t s = 1; s <= 20; ++s) EXPECT_TRUE(fakejac_instance(s)) << s;
}

TEST(Property, QuotientJacobians) {
  for (std::uint64_t s = 1; s <= 20; ++s) EXPECT_TRUE(imagesjac_instance(s)) << s;
}

TEST(Property, EulerRelation) {
  for (std::uint64_t s = 1; s <= 20; ++s) EXPECT_TRUE(euler_instance(s)) << s;
}

TEST(Property, SuiteIsReproducible) {
  Report a = suites::properties(7, 10), b = suites::properties(7, 10);
  EXPECT_TRUE(a.all_passed());
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
}

TEST(PlanarQuartics, GenericSixPointsGiveAPlane) {
  auto r = planar_quartic_dim(planar({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, -7, -7}, {1, -1, -9}}));
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.dimension, 2u);
  EXPECT_NE(r.minor_246, 0);
}

TEST(PlanarQuartics, SixPointsOnAConicViolateTheHypotheses) {
  // all on the conic xy - 2xz + yz = 0
  auto r = planar_quartic_dim(planar({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 3, -3}, {1, 4, -2}}));
  EXPECT_FALSE(r.violations.empty());
}

TEST(PlanarQuartics, WrongInputThrows) {
  EXPECT_THROW(planar_quartic_dim(planar({{1, 0, 0}})), std::invalid_argument);
}

TEST(Exceptional, ConicsAtP4OnC) {
  PointConfig cfg = fixture("C");
  Rational a = cfg.param("a"), b = cfg.param("b"), c = cfg.param("c");
  PolyTable t = build_quartics(cfg);
  Poly h12 = restrict_to_exceptional(t.at("f12"), cfg[4]);
  Poly h24 = restrict_to_exceptional(t.at("f24"), cfg[4]);
  EXPECT_TRUE(proportionality(h12, conic_h12(a, b, c)).has_value());
  EXPECT_TRUE(proportionality(h24, conic_h24(a, b, c)).has_value());
  ProjPoint want = {b - c, a * (1 - c), b * (1 - c)};
  EXPECT_TRUE(same_projective_point(expected_ypoint(a, b, c), want));
  auto p12 = second_point_on_line(h12, a, b);
  auto p24 = second_point_on_line(h24, a, b);
  ASSERT_TRUE(p12 && p24);
  EXPECT_TRUE(same_projective_point(*p12, want));
  EXPECT_TRUE(same_projective_point(*p24, want));
}

TEST(Exceptional, SuiteOnC) { EXPECT_TRUE(suites::run_poly("e4", fixture("C"), {}).all_passed()); }
