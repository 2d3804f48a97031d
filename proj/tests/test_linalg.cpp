#include "cremona/linalg.hpp"
#include "cremona/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cremona;

namespace {

QMatrix qm(std::vector<std::vector<long>> rows) {
  QMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = Rational(rows[r][c]);
  return m;
}

ZMatrix zm(std::vector<std::vector<long>> rows) {
  ZMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = Integer(rows[r][c]);
  return m;
}

}  // namespace

TEST(Rational, Parsing) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational(" -4/8 "), Rational(-1, 2));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
}

TEST(Rational, PrimitiveVector) {
  std::vector<Rational> v = {Rational(1, 2), Rational(-3, 4), Rational(0)};
  auto p = primitive_integer_vector(v);
  EXPECT_EQ(p, (std::vector<Integer>{2, -3, 0}));
  EXPECT_EQ(lcm_of_denominators(v), 4);
}

TEST(Matrix, DeterminantAndInverse) {
  QMatrix m = qm({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  EXPECT_EQ(det(m), 18);  // 2(12-1) - 1(4-0)
  auto inv = inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_TRUE((m * *inv).is_identity());
  EXPECT_FALSE(inverse(qm({{1, 2}, {2, 4}})).has_value());
  EXPECT_EQ(det(qm({{1, 2}, {2, 4}})), 0);
}

TEST(Matrix, RankAndNullspace) {
  QMatrix m = qm({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  EXPECT_EQ(rank(m), 2u);
  auto ker = nullspace(m);
  ASSERT_EQ(ker.size(), 1u);
  auto image = m * ker[0];
  for (const auto& v : image) EXPECT_EQ(v, 0);
}

TEST(Matrix, CharpolyOfDiagonal) {
  QMatrix m = qm({{2, 0}, {0, 3}});
  // t^2 - 5t + 6, stored from the constant term or the leading term
  auto cp = charpoly(m);
  ASSERT_EQ(cp.size(), 3u);
  std::vector<Rational> low = {6, -5, 1}, high = {1, -5, 6};
  EXPECT_TRUE(cp == low || cp == high);
}

TEST(Hermite, MembershipAndIndex) {
  // the lattice 2Z x Z inside Z^2
  HermiteForm h = hermite_normal_form(zm({{2, 0}, {4, 1}, {0, 3}}));
  EXPECT_EQ(h.pivots.size(), 2u);
  EXPECT_TRUE(hnf_contains(h, {2, 5}));
  EXPECT_FALSE(hnf_contains(h, {1, 0}));
  EXPECT_EQ(abs(hnf_index(h)), 2);
}

TEST(ModP, Basics) {
  using namespace modp;
  EXPECT_TRUE(is_prime(2147483629ULL));
  EXPECT_FALSE(is_prime(91));
  u64 p = 1000003;
  EXPECT_EQ(mulmod(invmod(12345, p), 12345, p), 1u);
  EXPECT_EQ(powmod(3, p - 1, p), 1u);
  auto ps = primes_below_2_31(5);
  ASSERT_EQ(ps.size(), 5u);
  for (auto q : ps) EXPECT_TRUE(is_prime(q));
  EXPECT_FALSE(reduce(Rational(1, 3), 3).has_value());
}

TEST(ModP, RationalReconstruction) {
  Integer m("1000000007");
  Rational q(-22, 7);
  // a = -22 * 7^{-1} mod m
  Integer inv;
  Integer seven = 7;
  mpz_invert(inv.get_mpz_t(), seven.get_mpz_t(), m.get_mpz_t());
  Integer a = (Integer(-22) * inv) % m;
  if (a < 0) a += m;
  auto back = rational_reconstruct(a, m);
  ASSERT_TRUE(back);
  EXPECT_EQ(*back, q);
}

TEST(Multimodular, AgreesWithExactNullspace) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> d(-50, 50);
  for (int trial = 0; trial < 5; ++trial) {
    // 6 x 9 matrix of rank at most 6 with a planted dependency
    ZMatrix a(6, 9);
    for (std::size_t r = 0; r < 5; ++r)
      for (std::size_t c = 0; c < 9; ++c) a(r, c) = Integer(d(rng));
    for (std::size_t c = 0; c < 9; ++c) a(5, c) = a(0, c) * 3 - a(1, c) * 7;
    auto fast = multimodular_nullspace(a);
    auto exact = nullspace(to_q(a));
    EXPECT_EQ(fast, exact) << "trial " << trial;
    EXPECT_EQ(kernel_dimension_mod_p(a, 2147483629ULL), exact.size());
  }
}
