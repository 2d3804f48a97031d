#include "cremona/cremona_map.hpp"
#include "cremona/json_io.hpp"
#include "cremona/linear_system.hpp"
#include "cremona/reference_forms.hpp"

#include <gtest/gtest.h>

using namespace cremona;

namespace {

PointConfig fixture(const std::string& name) { return io::load_config(std::string(CREMONA_CONFIG_DIR) + "/" + name + ".json"); }

ProjPoint e(int i) {
  ProjPoint p(4);
  p[i] = 1;
  return p;
}

}  // namespace

TEST(Plane, ThroughCoordinatePoints) {
  EXPECT_EQ(plane_through(e(1), e(2), e(3)), var(0));
}

TEST(Plane, CoordinatePlaneOnConfigE) {
  PointConfig cfg = fixture("E");
  Poly p125 = plane_through(cfg, 1, 2, 5);
  EXPECT_EQ(p125.size(), 1u);
  EXPECT_EQ(p125.degree(), 1);
  for (int i : {1, 2, 5}) EXPECT_EQ(p125.eval(cfg[i]), 0);
}

TEST(Plane, CollinearTripleThrows) {
  ProjPoint a = e(0), b = e(1), mid = {1, 1, 0, 0};
  EXPECT_THROW(plane_through(a, b, mid), std::invalid_argument);
}

TEST(Multiplicity, Trivial) {
  EXPECT_EQ(mult_at_point(var(1), e(0)), 1);
  EXPECT_EQ(mult_at_point(var(0), e(1)), 1);
  EXPECT_EQ(mult_at_point(var(1), e(1)), 0);
  EXPECT_EQ(mult_along_line(var(2), e(0), e(1)), 1);
  EXPECT_THROW(mult_at_point(Poly(4), e(0)), std::invalid_argument);
  EXPECT_THROW(mult_along_line(var(2), e(0), e(0)), std::invalid_argument);
}

TEST(Multiplicity, ReferenceQuarticOnB) {
  PointConfig cfg = fixture("B");
  Poly f0 = reference::quartic_f0(cfg.param("a"), cfg.param("b"), cfg.param("c"));
  EXPECT_EQ(mult_at_point(f0, cfg[0]), 2);
  EXPECT_EQ(mult_along_line(f0, cfg[0], cfg[5]), 2);
  EXPECT_TRUE(class_mismatches(f0, classes::Q("0", Basis::Y()), cfg).empty());
}

TEST(Multiplicity, SectionProductAtP4OnC) {
  PointConfig cfg = fixture("C");
  Sections s = build_sections(cfg);
  EXPECT_EQ(mult_at_point(s["s0''"], cfg[4]), 6);
  int sum = 0;
  for (const char* f : {"p245", "f12", "f3", "f13"}) sum += mult_at_point(lookup(s.table, f), cfg[4]);
  EXPECT_EQ(sum, 6);
}

TEST(Multiplicity, S0AlongP1P2) {
  // order 2 as a polynomial, order 1 as a section of D
  PointConfig cfg = fixture("E");
  Sections s = build_sections(cfg);
  int m = mult_along_line(s["s0"], cfg[1], cfg[2]);
  EXPECT_EQ(m, 2);
  EXPECT_EQ(Rational(m) + classes::D(Basis::Y()).coeff("E12"), 1);
}

TEST(System, AnticanonicalOnA) {
  PointConfig cfg = fixture("A");
  auto ls = linear_system(classes::anticanonical(Basis::X()), cfg);
  ASSERT_EQ(ls.dimension(), 1u);
  Poly want = reference::anticanonical_quartic(cfg.param("A"), cfg.param("B"), cfg.param("C"));
  EXPECT_TRUE(proportionality(ls.basis[0], want).has_value());
  auto coef = reference::anticanonical_coefficients(cfg.param("A"), cfg.param("B"), cfg.param("C"));
  EXPECT_EQ(std::vector<Rational>(coef.begin(), coef.end()), (std::vector<Rational>{8, -2, -4, 1, 2}));
}

TEST(System, QuarticsHaveOneSectionOnB) {
  PointConfig cfg = fixture("B");
  Basis y = Basis::Y();
  for (const auto& a : classes::quartic_labels()) {
    auto ls = linear_system(classes::Q(a, y), cfg);
    EXPECT_EQ(ls.dimension(), 1u) << a;
  }
  auto ls = linear_system(classes::Q("0", y), cfg);
  Poly f0 = reference::quartic_f0(cfg.param("a"), cfg.param("b"), cfg.param("c"));
  EXPECT_TRUE(proportionality(ls.basis[0], f0).has_value());
}

TEST(System, QuinticPencilsOnE) {
  PointConfig cfg = fixture("E");
  for (const auto& q : classes::quintic_names())
    EXPECT_EQ(linear_system(classes::quintic(q, Basis::Y()), cfg).dimension(), 2u) << q;
}

TEST(System, DegreeThirteen) {
  PointConfig cfg = fixture("E");
  Basis y = Basis::Y();
  auto d = linear_system(classes::D(y), cfg);
  EXPECT_EQ(d.dimension(), 4u);
  EXPECT_GT(d.primes_used, 0u);
  DivisorClass minus_e4 = classes::D(y) - DivisorClass::from_terms(y, {{"E4", 1}});
  EXPECT_EQ(linear_system(minus_e4, cfg).dimension(), 3u);
}

TEST(System, ExactAndModularPathsAgree) {
  // a small system solved exactly, compared to the modular kernel bound
  PointConfig cfg = fixture("C");
  auto conds = conditions_for(classes::quintic("D05", Basis::Y()), cfg);
  auto ls = linear_system(5, conds);
  EXPECT_EQ(ls.primes_used, 0u);
  EXPECT_EQ(dimension_bound_mod_p(5, conds), ls.dimension());
  DivisorClass d05 = classes::quintic("D05", Basis::Y());
  for (const auto& p : ls.basis)
    for (int i = 0; i < 6; ++i) EXPECT_GE(mult_at_point(p, cfg[i]), -d05.coeff("E" + std::to_string(i))) << i;
}
