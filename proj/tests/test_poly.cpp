#include "cremona/identity.hpp"
#include "cremona/poly.hpp"
#include "cremona/properties.hpp"

#include <gtest/gtest.h>

using namespace cremona;

namespace {

Poly x(int i) { return var(i); }
Poly c(long v) { return constant(Rational(v)); }

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Poly, ArithmeticAndDegree) {
  Poly p = x(0) * x(0) + c(2) * x(1) * x(2);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_FALSE((p + c(1)).is_homogeneous());
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((x(0) + x(1)).pow(3).size(), 4u);
  EXPECT_EQ(p.coeff({0, 1, 1, 0}), 2);
}

TEST(Poly, EvalDerivativeCompose) {
  Poly p = x(0) * x(0) * x(1) - c(3) * x(3);
  std::vector<Rational> pt = {2, 5, 7, Rational(1, 3)};
  EXPECT_EQ(p.eval(pt), 2 * 2 * 5 - 1);
  EXPECT_EQ(p.derivative(0), c(2) * x(0) * x(1));
  EXPECT_EQ(p.derivative(2), Poly(4));
  // x0 -> x0 + x1 leaves the x3 term alone
  Poly q = p.compose({x(0) + x(1), x(1), x(2), x(3)});
  EXPECT_EQ(q, (x(0) + x(1)) * (x(0) + x(1)) * x(1) - c(3) * x(3));
}

TEST(Poly, ExactDivision) {
  Poly a = x(0) + c(2) * x(1), b = x(2) - x(3);
  auto q = (a * b).divide_exact(a);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, b);
  EXPECT_FALSE((a * b + x(3)).divide_exact(a).has_value());
}

TEST(Poly, Proportionality) {
  Poly a = x(0) * x(1) - x(2) * x(3);
  auto l = proportionality(a * Rational(-5, 2), a);
  ASSERT_TRUE(l);
  EXPECT_EQ(*l, Rational(-5, 2));
  EXPECT_FALSE(proportionality(a, a + x(0) * x(0)).has_value());
  EXPECT_FALSE(proportionality(a, Poly(4)).has_value());
}

TEST(Poly, MonomialCounts) {
  for (int d = 0; d <= 13; ++d) EXPECT_EQ(static_cast<long>(monomials_of_degree(4, d).size()), binomial(d + 3, 3)) << d;
}

TEST(Poly, SpanAndRank) {
  std::vector<Poly> basis = {x(0) * x(1), x(2) * x(3), x(0) * x(0)};
  auto coef = express_in_span(c(3) * x(0) * x(1) - x(0) * x(0), basis);
  ASSERT_TRUE(coef);
  EXPECT_EQ(*coef, (std::vector<Rational>{3, 0, -1}));
  EXPECT_FALSE(express_in_span(x(1) * x(1), basis).has_value());
  EXPECT_EQ(poly_rank({x(0), x(1), x(0) + x(1)}), 2u);
}

TEST(Poly, IntegerScaling) {
  Poly p = x(0) * Rational(2, 3) + x(1) * Rational(4, 9);
  auto [ip, s] = to_integer(p);
  EXPECT_EQ(to_rational(ip) * s, p);
}

TEST(Jacobian, IdentityMapHasDeterminantOne) {
  EXPECT_EQ(jacobian_det({x(0), x(1), x(2), x(3)}), c(1));
}

TEST(Jacobian, DiagonalSquare) {
  EXPECT_EQ(jacobian_det({x(0) * x(0), x(1), x(2), x(3)}), c(2) * x(0));
}

TEST(Jacobian, AgreesWithPointwiseEvaluation) {
  PolySampler ps(5);
  std::vector<Poly> fs;
  for (int i = 0; i < 4; ++i) fs.push_back(ps.homogeneous(4, 3));
  Poly det = jacobian_det(fs);
  auto partials = jacobian_partials(fs);
  for (int k = 0; k < 5; ++k) {
    auto pt = ps.point(4, 20);
    EXPECT_EQ(det.eval(pt), jacobian_det_at(partials, pt));
  }
}

TEST(Jacobian, WrongArityThrows) { EXPECT_THROW(jacobian_det({x(0), x(1)}), std::invalid_argument); }

TEST(Identity, EulerRelationBothModes) {
  PolySampler ps(11);
  Poly h = ps.homogeneous(4, 5);
  Poly lhs(4);
  for (int i = 0; i < 4; ++i) lhs += x(i) * h.derivative(i);
  for (CheckMode mode : {CheckMode::Sample, CheckMode::Expand}) {
    auto r = identity_check(Expr::leaf(lhs), Expr::leaf(h), mode);
    EXPECT_TRUE(r.holds) << to_string(mode);
    EXPECT_EQ(r.scalar, 5);
  }
}

TEST(Identity, ProductAgainstExpansion) {
  Poly a = x(0) - x(1), b = x(2) + c(3) * x(3);
  Expr lhs = Expr::product({{Expr::leaf(a), 2}, {Expr::leaf(b), 1}}, Rational(7));
  Expr rhs = Expr::leaf(a * a * b);
  auto r = identity_check(lhs, rhs, CheckMode::Sample);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.scalar, 7);
}

TEST(Identity, DetectsFalseIdentity) {
  Poly a = x(0) * x(1), b = x(0) * x(1) + x(2) * x(3);
  EXPECT_FALSE(identity_check(Expr::leaf(a), Expr::leaf(b), CheckMode::Sample).holds);
  EXPECT_FALSE(identity_check(Expr::leaf(a), Expr::leaf(b), CheckMode::Expand).holds);
}

TEST(Identity, SamplingIsSeedDeterministic) {
  Poly a = (x(0) + x(1)).pow(4);
  SampleOptions o;
  o.seed = 99;
  auto r1 = identity_check(Expr::leaf(a), Expr::leaf(a * Rational(3)), CheckMode::Sample, o);
  auto r2 = identity_check(Expr::leaf(a), Expr::leaf(a * Rational(3)), CheckMode::Sample, o);
  EXPECT_EQ(r1.scalar, Rational(1, 3));
  EXPECT_EQ(r1.samples_used, r2.samples_used);
  EXPECT_EQ(r1.skipped, r2.skipped);
}

TEST(Identity, ModeParsing) {
  EXPECT_EQ(parse_mode("expand"), CheckMode::Expand);
  EXPECT_EQ(to_string(parse_mode("sample")), "sample");
  EXPECT_THROW(parse_mode("fast"), std::invalid_argument);
}
