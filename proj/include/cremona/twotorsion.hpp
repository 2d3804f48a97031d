#pragma once

// The 2-torsion group of a genus-2 Jacobian in the even-subset model: a point is
// an even subset of {0..5} modulo complement, and the pairing is intersection
// parity. Points are indexed 0..15 in the node order
//   0 1 2 3 4 5 12 13 14 15 23 24 25 34 35 45
// which is also the N-coordinate order of the Kummer lattice.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cremona::twotorsion {

using Mask6 = std::uint8_t;    // subset of {0..5}
using PointSet = std::uint16_t;  // subset of the 16 points

inline constexpr int kPoints = 16;

/// Subset of {0..5} attached to each point index.
inline constexpr std::array<Mask6, kPoints> kSubset = {
    0,                                // 0
    0b000011, 0b000101, 0b001001, 0b010001, 0b100001,  // 1..5 -> {0,i}
    0b000110, 0b001010, 0b010010, 0b100010,            // 12 13 14 15
    0b001100, 0b010100, 0b100100,                      // 23 24 25
    0b011000, 0b101000,                                // 34 35
    0b110000,                                          // 45
};

inline constexpr std::array<const char*, kPoints> kLabel = {
    "0", "1", "2", "3", "4", "5", "12", "13", "14", "15", "23", "24", "25", "34", "35", "45"};

inline Mask6 canonical(Mask6 s) {
  s &= 0x3f;
  if (std::popcount(static_cast<unsigned>(s)) > 3) s = static_cast<Mask6>(~s & 0x3f);
  return s;
}

/// Index of the point represented by an even subset.
inline int from_subset(Mask6 s) {
  if (std::popcount(static_cast<unsigned>(s)) % 2) throw std::invalid_argument("odd subset");
  s = canonical(s);
  if (std::popcount(static_cast<unsigned>(s)) == 3) throw std::logic_error("unreachable");
  for (int i = 0; i < kPoints; ++i)
    if (kSubset[i] == s) return i;
  throw std::logic_error("subset not found");
}

inline int from_label(const std::string& label) {
  for (int i = 0; i < kPoints; ++i)
    if (label == kLabel[i]) return i;
  throw std::invalid_argument("unknown 2-torsion label: " + label);
}

inline std::string label(int p) { return kLabel.at(p); }

inline int add(int a, int b) { return from_subset(kSubset[a] ^ kSubset[b]); }

inline int pairing(int a, int b) {
  return std::popcount(static_cast<unsigned>(kSubset[a] & kSubset[b])) & 1;
}

/// Point attached to the 3-subset {i,j,k} of {0..5}, using the representative
/// that contains 0: {0,j,k} is the point jk.
inline int triple_point(int i, int j, int k) {
  if (i == j || j == k || i == k) throw std::invalid_argument("triple indices must be distinct");
  Mask6 s = static_cast<Mask6>((1u << i) | (1u << j) | (1u << k));
  if (!(s & 1)) s = static_cast<Mask6>(~s & 0x3f);
  return from_subset(static_cast<Mask6>(s & ~1u));
}

inline PointSet make_set(const std::vector<int>& pts) {
  PointSet s = 0;
  for (int p : pts) s |= static_cast<PointSet>(1u << p);
  return s;
}

inline std::vector<int> members(PointSet s) {
  std::vector<int> out;
  for (int i = 0; i < kPoints; ++i)
    if (s >> i & 1) out.push_back(i);
  return out;
}

inline PointSet translate(PointSet s, int alpha) {
  PointSet out = 0;
  for (int p : members(s)) out |= static_cast<PointSet>(1u << add(p, alpha));
  return out;
}

inline std::string format_set(PointSet s) {
  std::string out = "{";
  bool first = true;
  for (int p : members(s)) {
    if (!first) out += ",";
    out += kLabel[p];
    first = false;
  }
  return out + "}";
}

struct FlatEnumeration {
  std::vector<PointSet> hyperplanes;
  std::vector<PointSet> planes;
  std::vector<PointSet> gopel;
  std::vector<PointSet> rosenhain;
  std::vector<PointSet> weber;
};

inline std::vector<PointSet> cosets(PointSet subgroup) {
  std::set<PointSet> out;
  for (int a = 0; a < kPoints; ++a) out.insert(translate(subgroup, a));
  return {out.begin(), out.end()};
}

inline FlatEnumeration enumerate_flats() {
  FlatEnumeration e;
  std::set<PointSet> hyper;
  for (int v = 1; v < kPoints; ++v) {
    PointSet zero = 0, one = 0;
    for (int x = 0; x < kPoints; ++x) (pairing(x, v) ? one : zero) |= static_cast<PointSet>(1u << x);
    hyper.insert(zero);
    hyper.insert(one);
  }
  e.hyperplanes.assign(hyper.begin(), hyper.end());

  std::set<PointSet> iso, noniso;
  for (int u = 1; u < kPoints; ++u)
    for (int w = u + 1; w < kPoints; ++w) {
      PointSet sub = make_set({0, u, w, add(u, w)});
      (pairing(u, w) ? noniso : iso).insert(sub);
    }
  std::set<PointSet> planes, gop, ros;
  for (PointSet s : iso)
    for (PointSet c : cosets(s)) { gop.insert(c); planes.insert(c); }
  for (PointSet s : noniso)
    for (PointSet c : cosets(s)) { ros.insert(c); planes.insert(c); }
  e.planes.assign(planes.begin(), planes.end());
  e.gopel.assign(gop.begin(), gop.end());
  e.rosenhain.assign(ros.begin(), ros.end());

  std::set<PointSet> weber;
  for (PointSet g : e.gopel)
    for (PointSet r : e.rosenhain) {
      PointSet x = static_cast<PointSet>(g ^ r);
      if (std::popcount(static_cast<unsigned>(x)) == 6) weber.insert(x);
    }
  e.weber.assign(weber.begin(), weber.end());
  return e;
}

inline bool is_weber(const FlatEnumeration& e, PointSet s) {
  return std::binary_search(e.weber.begin(), e.weber.end(), s);
}

/// The two hyperplane families attached to a pair i<j of {0..5}, written with
/// point and line labels: {E_i, E_j, L_ikm...} and its complement.
inline std::pair<PointSet, PointSet> pair_hyperplanes(int i, int j) {
  std::vector<int> rest;
  for (int t = 0; t < 6; ++t)
    if (t != i && t != j) rest.push_back(t);
  std::vector<int> first = {i, j}, second;
  for (std::size_t a = 0; a < rest.size(); ++a)
    for (std::size_t b = a + 1; b < rest.size(); ++b) first.push_back(triple_point(i, rest[a], rest[b]));
  for (int k : rest) {
    second.push_back(k);
    second.push_back(triple_point(i, j, k));
  }
  return {make_set(first), make_set(second)};
}

/// The four displayed families of affine 2-planes, each deduplicated.
inline std::array<std::set<PointSet>, 4> plane_families() {
  std::array<std::set<PointSet>, 4> fam;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      for (int k = 0; k < 6; ++k)
        for (int m = 0; m < 6; ++m) {
          std::set<int> idx = {i, j, k, m};
          if (idx.size() != 4) continue;
          fam[1].insert(make_set({i, j, triple_point(i, k, m), triple_point(j, k, m)}));
          fam[2].insert(make_set({i, triple_point(i, j, k), triple_point(i, j, m), triple_point(i, k, m)}));
          if (i < j && j < k) fam[0].insert(make_set({i, j, k, triple_point(i, j, k)}));
          for (int p = 0; p < 6; ++p)
            for (int q = 0; q < 6; ++q) {
              std::set<int> all = {i, k, m, p, q};
              if (all.size() != 5 || j == p || j == q) continue;
              fam[3].insert(make_set({triple_point(i, k, p), triple_point(i, k, q), triple_point(i, m, p),
                                      triple_point(i, m, q)}));
            }
        }
  return fam;
}

}  // namespace cremona::twotorsion
