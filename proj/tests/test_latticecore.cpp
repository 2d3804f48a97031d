#include "cremona/picard.hpp"

#include <gtest/gtest.h>

using namespace cremona;

namespace {

DivisorClass cls(const Basis& b, std::vector<std::pair<std::string, long>> t) { return DivisorClass::from_terms(b, t); }

}  // namespace

TEST(Basis, GeneratorCounts) {
  EXPECT_EQ(Basis::X().size(), 22u);
  EXPECT_EQ(Basis::Y().size(), 16u);
  EXPECT_EQ(Basis::Yn(4).size(), 17u);
}

TEST(Basis, GeneratorOrder) {
  const auto& g = Basis::Y().generators();
  std::vector<std::string> want = {"H",   "E0",  "E1",  "E2",  "E3",  "E4",  "E5",  "E03",
                                   "E04", "E34", "E12", "E15", "E25", "E05", "E13", "E24"};
  EXPECT_EQ(g, want);
  const auto& x = Basis::X().generators();
  EXPECT_EQ(std::vector<std::string>(x.end() - 6, x.end()),
            (std::vector<std::string>{"E01", "E02", "E14", "E23", "E35", "E45"}));
}

TEST(Basis, UnknownSymbolThrows) { EXPECT_THROW(Basis::Y().index("E01"), std::exception); }

TEST(Classes, Q24IsAMinusE03) {
  Basis y = Basis::Y();
  EXPECT_EQ(classes::Q("24", y), classes::A(y) - cls(y, {{"E03", 1}}));
}

TEST(Classes, DPlusDualHasDegree26) {
  Basis y = Basis::Y();
  EXPECT_EQ((classes::D(y) + classes::D_dual(y)).coeff("H"), 26);
}

TEST(Classes, AnticanonicalOnX) {
  Basis x = Basis::X();
  auto k = classes::anticanonical(x);
  EXPECT_EQ(k.coeff("H"), 4);
  for (int i = 0; i < 6; ++i) EXPECT_EQ(k.coeff("E" + std::to_string(i)), -2);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) EXPECT_EQ(k.coeff("E" + line_label(i, j)), -1) << i << j;
}

TEST(Classes, Degrees) {
  Basis y = Basis::Y();
  EXPECT_EQ(classes::D(y).degree(), 13);
  EXPECT_EQ(classes::Q("0", y).degree(), 4);
  EXPECT_EQ(DivisorClass(y).degree(), 0);
  for (const auto& a : classes::quartic_labels()) EXPECT_EQ(classes::Q(a, y).degree(), 4) << a;
  for (const auto& q : classes::quintic_names()) EXPECT_EQ(classes::quintic(q, y).degree(), 5) << q;
}

TEST(Classes, S3Orbits) {
  Basis y = Basis::Y();
  EXPECT_EQ(s3_orbit(classes::D(y)), std::set<DivisorClass>{classes::D(y)});
  EXPECT_EQ(s3_orbit(classes::A(y)), std::set<DivisorClass>{classes::A(y)});
  std::set<DivisorClass> q0 = {classes::Q("0", y), classes::Q("3", y), classes::Q("4", y)};
  EXPECT_EQ(s3_orbit(classes::Q("0", y)), q0);
}

TEST(Classes, S3IsAGroupOfOrderSix) {
  auto els = s3_elements();
  ASSERT_EQ(els.size(), 6u);
  std::set<PointPermutation> set(els.begin(), els.end());
  for (const auto& a : els)
    for (const auto& b : els) EXPECT_TRUE(set.count(compose(a, b)));
}

TEST(Classes, DualExponentsSumToDegree) {
  // deg g_beta(psi) = 13 * 4 = 52 = sum over alpha of 4 * m(alpha, beta)
  for (const auto& beta : classes::dual_quartic_labels()) {
    long sum = 0;
    for (const auto& alpha : classes::quartic_labels()) sum += 4 * classes::fusion_exponent(alpha, beta);
    EXPECT_EQ(sum, 52) << beta;
  }
}

TEST(Classes, DualClassesFollowTheIndexSwitch) {
  Basis y = Basis::Y();
  for (const auto& beta : classes::dual_quartic_labels()) {
    auto p = classes::P(beta, y);
    EXPECT_EQ(p.degree(), 4);
    EXPECT_EQ(p.coeff("H"), 4);
  }
  // The displayed variants differ from the switched ones on exactly three labels.
  int differing = 0;
  for (const auto& beta : classes::dual_quartic_labels())
    differing += classes::P(beta, y) != classes::P_displayed(beta, y);
  EXPECT_EQ(differing, 3);
  EXPECT_NE(classes::P("1", y), classes::P_displayed("1", y));
  EXPECT_EQ(classes::P("05", y), classes::P_displayed("05", y));
}

TEST(Classes, ArithmeticAndBasisChange) {
  Basis y = Basis::Y(), x = Basis::X();
  auto d = classes::D(y);
  EXPECT_EQ(d - d, DivisorClass(y));
  EXPECT_EQ((d * Rational(2)).coeff("E0"), -10);
  auto dx = d.in_basis(x);
  EXPECT_EQ(dx.coeff("E01"), 0);
  EXPECT_EQ(dx.in_basis(y), d);
  EXPECT_THROW(d + dx, std::exception);
}
