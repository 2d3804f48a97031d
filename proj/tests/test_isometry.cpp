#include "cremona/isometry.hpp"
#include "cremona/suites_lattice.hpp"

#include <gtest/gtest.h>

using namespace cremona;
namespace tt = cremona::twotorsion;

namespace {

NSClass node(const char* label) { return NSClass::node(tt::from_label(label)); }

DivisorClass xcls(std::vector<std::pair<std::string, long>> t) { return DivisorClass::from_terms(Basis::X(), t); }

DivisorClass on_x(const DivisorClass& c) { return c.in_basis(Basis::X()); }

}  // namespace

namespace cremona {
void PrintTo(const DivisorClass& c, std::ostream* os) { *os << c.to_string(); }
void PrintTo(const NSClass& c, std::ostream* os) { *os << c.to_string(); }
}  // namespace cremona

TEST(Keum, NodeImages) {
  LatticeMap kappa = keum_matrix();
  EXPECT_EQ(apply(kappa, node("5")), node("0"));
  EXPECT_EQ(apply(kappa, apply(kappa, node("25"))), node("24"));
}

TEST(Keum, LambdaImageSquare) {
  NSClass k = apply(keum_matrix(), NSClass::lambda());
  // (7 Lambda - 4 sum over a hexad)^2 = 49*4 - 16*6*2
  EXPECT_EQ(gram(k, k), 49 * 4 - 16 * 6 * 2);
}

TEST(Keum, PreservesGramAndFixesRAndG) {
  LatticeMap kappa = keum_matrix();
  EXPECT_TRUE(preserves_gram(kappa));
  EXPECT_TRUE(preserves_gram(keum_matrix(HexadVariant::H1)));
  EXPECT_EQ(apply(kappa, ns::R()), ns::R());
  EXPECT_EQ(apply(kappa, ns::G()), ns::G());
}

TEST(Eta, TableRows) {
  LatticeMap eta = eta_matrix();
  Basis y = Basis::Y();
  EXPECT_EQ(apply(eta, xcls({{"E03", 1}})), xcls({{"E15", 1}}));
  EXPECT_EQ(apply(eta, xcls({{"H", 1}})), on_x(classes::D(y)));
  auto k = classes::anticanonical(Basis::X());
  EXPECT_EQ(apply(eta, k), k);
}

TEST(Eta, InverseRows) {
  LatticeMap inv = eta_inverse();
  EXPECT_EQ(apply(inv, xcls({{"E15", 1}})), xcls({{"E03", 1}}));
  EXPECT_TRUE(dual_check());
  EXPECT_TRUE((eta_matrix().matrix * inv.matrix).is_identity());
}

TEST(Eta, IntertwinesWithKeum) { EXPECT_TRUE(intertwine_check()); }

TEST(Eta, CorruptedEntryBreaksIntertwining) {
  LatticeMap bad = eta_matrix();
  bad.matrix(0, 0) += 1;
  EXPECT_FALSE(intertwine_check(bad));
  Report rep = suites::verify_lattice(bad);
  const CheckRecord* rec = rep.find("isometry.intertwining");
  ASSERT_NE(rec, nullptr);
  EXPECT_EQ(rec->status, Status::Fail);
  EXPECT_FALSE(rep.all_passed());
}

TEST(Eta, DefaultVerificationPasses) { EXPECT_TRUE(suites::verify_lattice().all_passed()); }

TEST(Family, FirstTerms) {
  Basis y = Basis::Y();
  EXPECT_EQ(iterate_F(1), xcls({{"E15", 1}}));
  EXPECT_EQ(iterate_F(2), on_x(classes::A(y) - DivisorClass::from_terms(y, {{"E24", 1}})));
  EXPECT_EQ(iterate_F(2), on_x(classes::Q("15", y)));
  EXPECT_EQ(iterate_F(3), closed_form_F(3));
}

TEST(Family, ClosedFormExamples) {
  Basis y = Basis::Y();
  EXPECT_EQ(closed_form_F(1), xcls({{"E15", 1}}));
  EXPECT_EQ(closed_form_F(2), on_x(classes::A(y) - DivisorClass::from_terms(y, {{"E24", 1}})));
  EXPECT_EQ(closed_form_F(10).degree(), 180);
  EXPECT_THROW(closed_form_F(0), std::invalid_argument);
}

TEST(Family, ZeroBoundaryValueDisagrees) {
  // Taking m_0 = 0 instead of the residue-table value -1 gives the wrong F_1.
  EXPECT_EQ(fk_coefficients(0).m, -1);
  DivisorClass with_zero = closed_form_F(1, Integer(0));
  EXPECT_NE(with_zero, iterate_F(1));
  EXPECT_EQ(with_zero, xcls({{"E12", -1}, {"E25", -1}}));
}

TEST(Family, ClosedFormMatchesPowersUpTo60) {
  auto fs = iterate_F_all(60);
  for (int k = 1; k <= 60; ++k) {
    EXPECT_EQ(fs[k - 1], closed_form_F(k)) << k;
    EXPECT_EQ(fs[k - 1].degree(), 2 * k * (k - 1)) << k;
  }
}

TEST(Family, Proportionality) {
  auto f1 = iterate_F(1);
  EXPECT_TRUE(proportional(f1, f1 * Rational(2)));
  EXPECT_TRUE(proportional(f1, -f1));
  EXPECT_TRUE(nonproportionality_scan(2));
  EXPECT_TRUE(nonproportionality_scan(50));
  EXPECT_FALSE(first_proportional_pair(iterate_F_all(50)).has_value());
}

TEST(Family, InfiniteOrderEvidence) {
  auto ev = order_evidence(100);
  EXPECT_FALSE(ev.kappa_power_identity);
  EXPECT_FALSE(ev.eta_power_identity);
  ASSERT_EQ(ev.eta_max_entry.size(), 100u);
  EXPECT_GT(ev.eta_max_entry.back(), ev.eta_max_entry.front());
}

TEST(Suites, IterateTableFirstRow) {
  Report rep = suites::iterate(3);
  ASSERT_EQ(rep.table.size(), 3u);
  ASSERT_EQ(rep.table_header.size(), 24u);
  EXPECT_EQ(rep.table[0][0], "1");
  EXPECT_EQ(rep.table[0][1], "0");
  for (std::size_t c = 2; c < rep.table_header.size(); ++c)
    EXPECT_EQ(rep.table[0][c], rep.table_header[c] == "E15" ? "1" : "0") << rep.table_header[c];
  EXPECT_THROW(suites::iterate(0), std::invalid_argument);
}

TEST(Suites, Hexads) {
  Report rep = suites::hexads();
  EXPECT_TRUE(rep.all_passed());
  EXPECT_EQ(rep.find("flats.hyperplane_count")->witness["count"], 30);
  EXPECT_EQ(rep.find("flats.plane_count")->witness["count"], 140);
}
