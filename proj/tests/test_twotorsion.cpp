#include "cremona/twotorsion.hpp"

#include <gtest/gtest.h>

#include <bitset>
#include <set>
#include <string>

using namespace cremona::twotorsion;

namespace {

// Independent model: a point is an even subset of {0..5} modulo complement,
// read straight off its label ("0" is empty, "i" is {0,i}, "jk" is {j,k}).
std::set<int> subset_of(const std::string& label) {
  if (label == "0") return {};
  if (label.size() == 1) return {0, label[0] - '0'};
  return {label[0] - '0', label[1] - '0'};
}

std::set<int> sym_diff(const std::set<int>& a, const std::set<int>& b) {
  std::set<int> out;
  for (int x : a)
    if (!b.count(x)) out.insert(x);
  for (int x : b)
    if (!a.count(x)) out.insert(x);
  return out;
}

std::set<int> reduce(std::set<int> s) {
  if (s.size() <= 2) return s;
  std::set<int> c;
  for (int i = 0; i < 6; ++i)
    if (!s.count(i)) c.insert(i);
  return c;
}

int oracle_add(int a, int b) {
  auto s = reduce(sym_diff(subset_of(label(a)), subset_of(label(b))));
  for (int p = 0; p < kPoints; ++p)
    if (subset_of(label(p)) == s) return p;
  return -1;
}

int oracle_pairing(int a, int b) {
  int n = 0;
  for (int x : subset_of(label(a))) n += subset_of(label(b)).count(x);
  return n % 2;
}

PointSet set_of(std::initializer_list<const char*> labels) {
  PointSet s = 0;
  for (const char* l : labels) s |= static_cast<PointSet>(1u << from_label(l));
  return s;
}

}  // namespace

TEST(TwoTorsion, AdditionExamples) {
  EXPECT_EQ(add(from_label("0"), from_label("5")), from_label("5"));
  EXPECT_EQ(add(from_label("12"), from_label("13")), from_label("23"));
  EXPECT_EQ(add(from_label("14"), from_label("23")), from_label("5"));
}

TEST(TwoTorsion, AdditionMatchesSubsetModel) {
  for (int a = 0; a < kPoints; ++a)
    for (int b = 0; b < kPoints; ++b) EXPECT_EQ(add(a, b), oracle_add(a, b)) << label(a) << "+" << label(b);
}

TEST(TwoTorsion, PairingExamples) {
  EXPECT_EQ(pairing(from_label("1"), from_label("2")), 1);
  EXPECT_EQ(pairing(from_label("12"), from_label("34")), 0);
  for (int x = 0; x < kPoints; ++x) EXPECT_EQ(pairing(x, x), 0);
}

TEST(TwoTorsion, PairingMatchesSubsetModel) {
  for (int a = 0; a < kPoints; ++a)
    for (int b = 0; b < kPoints; ++b) EXPECT_EQ(pairing(a, b), oracle_pairing(a, b));
}

TEST(TwoTorsion, PairingIsNondegenerate) {
  // Rank over F2 of the 16x16 table by elimination on bit rows.
  std::vector<std::bitset<16>> rows(kPoints);
  for (int a = 0; a < kPoints; ++a)
    for (int b = 0; b < kPoints; ++b) rows[a][b] = pairing(a, b);
  int rank = 0;
  for (int col = 0; col < kPoints; ++col) {
    int piv = -1;
    for (int r = rank; r < kPoints; ++r)
      if (rows[r][col]) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int r = 0; r < kPoints; ++r)
      if (r != rank && rows[r][col]) rows[r] ^= rows[rank];
    ++rank;
  }
  // the point 0 is the zero vector, so the table has rank 4 on the 16 points
  EXPECT_EQ(rank, 4);
}

TEST(TwoTorsion, Translation) {
  PointSet h1 = set_of({"0", "14", "15", "23", "25", "34"});
  EXPECT_EQ(translate(h1, from_label("5")), set_of({"5", "23", "1", "14", "2", "12"}));
  EXPECT_EQ(translate(h1, 0), h1);
  for (int a = 0; a < kPoints; ++a) EXPECT_EQ(translate(translate(h1, a), a), h1);
}

TEST(TwoTorsion, FlatCounts) {
  auto e = enumerate_flats();
  EXPECT_EQ(e.hyperplanes.size(), 30u);
  EXPECT_EQ(e.planes.size(), 140u);
  EXPECT_EQ(e.weber.size(), 192u);
  EXPECT_EQ(e.gopel.size(), 60u);
  EXPECT_EQ(e.rosenhain.size(), 80u);
}

TEST(TwoTorsion, SubspaceCountsFromTheModel) {
  // 2-dimensional subspaces of F2^4 split 15 isotropic and 20 not.
  std::set<std::set<int>> iso, non;
  for (int u = 1; u < kPoints; ++u)
    for (int w = u + 1; w < kPoints; ++w) {
      std::set<int> sub = {0, u, w, oracle_add(u, w)};
      (oracle_pairing(u, w) ? non : iso).insert(sub);
    }
  EXPECT_EQ(iso.size(), 15u);
  EXPECT_EQ(non.size(), 20u);
  EXPECT_EQ(iso.size() * 4, enumerate_flats().gopel.size());
  EXPECT_EQ(non.size() * 4, enumerate_flats().rosenhain.size());
}

TEST(TwoTorsion, WeberMembership) {
  auto e = enumerate_flats();
  EXPECT_TRUE(is_weber(e, set_of({"0", "14", "15", "23", "25", "34"})));
  EXPECT_TRUE(is_weber(e, set_of({"5", "23", "1", "14", "2", "12"})));
  // reported rather than asserted elsewhere; pin the enumerated answer here
  EXPECT_FALSE(is_weber(e, set_of({"0", "1", "2", "3", "4", "5"})));
}

TEST(TwoTorsion, PairHyperplanesAreComplementaryHyperplanes) {
  auto e = enumerate_flats();
  std::set<PointSet> hyper(e.hyperplanes.begin(), e.hyperplanes.end());
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      auto [g, gc] = pair_hyperplanes(i, j);
      EXPECT_TRUE(hyper.count(g));
      EXPECT_TRUE(hyper.count(gc));
      EXPECT_EQ(static_cast<PointSet>(g ^ gc), 0xffff);
    }
}

TEST(TwoTorsion, BadLabelThrows) {
  EXPECT_THROW(from_label("06"), std::invalid_argument);
  EXPECT_THROW(triple_point(1, 1, 2), std::invalid_argument);
}
