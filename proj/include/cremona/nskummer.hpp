#pragma once

// Neron-Severi lattice of the Kummer K3 surface in the frame (Lambda, N_0..N_45).
// Coordinates are exact rationals; the Gram form is diag(4, -2, ..., -2).

#include "cremona/linalg.hpp"
#include "cremona/picard.hpp"
#include "cremona/rational.hpp"
#include "cremona/twotorsion.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

namespace cremona {

inline constexpr std::size_t kNSRank = 17;

class NSClass {
 public:
  NSClass() : c_(kNSRank) {}
  explicit NSClass(std::vector<Rational> coords) : c_(std::move(coords)) {
    if (c_.size() != kNSRank) throw std::invalid_argument("NS class needs 17 coordinates");
  }

  static NSClass lambda() {
    NSClass x;
    x.c_[0] = 1;
    return x;
  }
  /// Node N_p for a 2-torsion point index p.
  static NSClass node(int p) {
    NSClass x;
    x.c_.at(1 + p) = 1;
    return x;
  }

  const std::vector<Rational>& coords() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  Rational& operator[](std::size_t i) { return c_[i]; }
  Rational lambda_coeff() const { return c_[0]; }
  Rational node_coeff(int p) const { return c_[1 + p]; }

  NSClass operator+(const NSClass& o) const {
    NSClass r = *this;
    for (std::size_t i = 0; i < kNSRank; ++i) r.c_[i] += o.c_[i];
    return r;
  }
  NSClass operator-(const NSClass& o) const {
    NSClass r = *this;
    for (std::size_t i = 0; i < kNSRank; ++i) r.c_[i] -= o.c_[i];
    return r;
  }
  NSClass operator-() const { return NSClass() - *this; }
  NSClass operator*(const Rational& s) const {
    NSClass r = *this;
    for (auto& v : r.c_) v *= s;
    return r;
  }
  NSClass& operator+=(const NSClass& o) { return *this = *this + o; }
  NSClass& operator-=(const NSClass& o) { return *this = *this - o; }
  bool operator==(const NSClass& o) const { return c_ == o.c_; }
  bool operator!=(const NSClass& o) const { return c_ != o.c_; }

  bool is_half_integral() const {
    for (const auto& v : c_) {
      Rational t = v * 2;
      if (t.get_den() != 1) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < kNSRank; ++i) {
      if (c_[i] == 0) continue;
      std::string name = i == 0 ? "L" : "N" + twotorsion::label(static_cast<int>(i) - 1);
      if (!out.empty() && c_[i] > 0) out += "+";
      if (c_[i] == -1) out += "-";
      else if (c_[i] != 1) out += c_[i].get_str() + "*";
      out += name;
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::vector<Rational> c_;
};

inline NSClass operator*(const Rational& s, const NSClass& x) { return x * s; }

inline Rational gram(const NSClass& a, const NSClass& b) {
  Rational s = 4 * a[0] * b[0];
  for (std::size_t i = 1; i < kNSRank; ++i) s -= 2 * a[i] * b[i];
  return s;
}

inline QMatrix gram_matrix() {
  QMatrix g(kNSRank, kNSRank);
  g(0, 0) = 4;
  for (std::size_t i = 1; i < kNSRank; ++i) g(i, i) = -2;
  return g;
}

namespace ns {

inline NSClass sum_nodes(twotorsion::PointSet s) {
  NSClass x;
  for (int p : twotorsion::members(s)) x[1 + p] += 1;
  return x;
}

inline NSClass E(int i) { return NSClass::node(i); }

/// L_{ijk}: the node of the canonical representative {0,j,k} of the triple.
inline NSClass L(int i, int j, int k) { return NSClass::node(twotorsion::triple_point(i, j, k)); }

/// The ten distinct line nodes N_jk, 1 <= j < k <= 5.
inline NSClass sum_lines() {
  NSClass x;
  for (int p = 6; p < twotorsion::kPoints; ++p) x[1 + p] = 1;
  return x;
}

inline NSClass H_S() { return (NSClass::lambda() * 3 - sum_lines()) * Rational(1, 2); }

inline NSClass T(int i, int j) {
  if (i == j) throw std::invalid_argument("T needs distinct indices");
  NSClass x = NSClass::lambda() - E(i) - E(j);
  for (int k = 0; k < 6; ++k)
    if (k != i && k != j) x -= L(i, j, k);
  return x * Rational(1, 2);
}

inline NSClass R() {
  NSClass x = NSClass::lambda();
  for (int i = 0; i < 6; ++i) x -= E(i);
  return x * Rational(1, 2);
}

inline std::vector<int> complement(std::initializer_list<int> used) {
  std::vector<int> rest;
  for (int t = 0; t < 6; ++t)
    if (std::find(used.begin(), used.end(), t) == used.end()) rest.push_back(t);
  return rest;
}

inline NSClass C(int i, int j) {
  NSClass x;
  for (int k : complement({i, j})) x += E(k) + L(i, j, k);
  return x * Rational(1, 2);
}

inline NSClass D(int i, int j) { return sum_nodes(0xffff) * Rational(1, 2) - C(i, j); }

inline NSClass A(int i, int j) {
  auto rest = complement({i, j});
  NSClass half = E(i) + E(j);
  for (std::size_t a = 0; a < rest.size(); ++a)
    for (std::size_t b = a + 1; b < rest.size(); ++b) half += L(i, rest[a], rest[b]);
  return NSClass::lambda() - half * Rational(1, 2);
}

/// Restriction of the anticanonical surface itself.
inline NSClass G() {
  NSClass x = NSClass::lambda() * Rational(-3, 2);
  for (int i = 0; i < 6; ++i) x += E(i) * Rational(1, 2);
  return x + sum_lines();
}

/// 2*Lambda minus the nodes of a hexad.
inline NSClass hexad_class(twotorsion::PointSet hexad) { return NSClass::lambda() * 2 - sum_nodes(hexad); }

inline twotorsion::PointSet hexad_H() {
  using namespace twotorsion;
  return make_set({from_label("5"), from_label("23"), from_label("1"), from_label("14"), from_label("2"),
                   from_label("12")});
}
inline twotorsion::PointSet hexad_H1() {
  using namespace twotorsion;
  return make_set({from_label("0"), from_label("14"), from_label("15"), from_label("23"), from_label("25"),
                   from_label("34")});
}

inline NSClass U() { return hexad_class(hexad_H()); }
inline NSClass M() { return hexad_class(hexad_H1()); }

inline int digit(char ch) {
  if (ch < '0' || ch > '5') throw std::invalid_argument(std::string("bad index digit ") + ch);
  return ch - '0';
}

/// Parses names such as Lambda, N14, H_S, T01, R, L012, C01, D01, A01, G, U, M.
inline NSClass named(const std::string& name) {
  if (name == "Lambda") return NSClass::lambda();
  if (name == "H_S") return H_S();
  if (name == "R") return R();
  if (name == "G") return G();
  if (name == "U") return U();
  if (name == "M") return M();
  if (name.size() >= 2 && name[0] == 'N') return NSClass::node(twotorsion::from_label(name.substr(1)));
  if (name.size() == 3) {
    int i = digit(name[1]), j = digit(name[2]);
    switch (name[0]) {
      case 'T': return T(i, j);
      case 'C': return C(i, j);
      case 'D': return D(i, j);
      case 'A': return A(i, j);
      default: break;
    }
  }
  if (name.size() == 4 && name[0] == 'L') return L(digit(name[1]), digit(name[2]), digit(name[3]));
  throw std::invalid_argument("unknown NS class " + name);
}

}  // namespace ns

// ---------------------------------------------------------------------------
// Restriction Pic(X) -> NS(S).

inline NSClass restrict_generator(const std::string& gen) {
  if (gen == "H") return ns::H_S();
  if (gen.size() == 2 && gen[0] == 'E') return ns::E(ns::digit(gen[1]));
  if (gen.size() == 3 && gen[0] == 'E') return ns::T(ns::digit(gen[1]), ns::digit(gen[2]));
  throw std::invalid_argument("generator " + gen + " has no image in NS(S)");
}

/// 17 x |basis| matrix of the restriction map.
inline QMatrix restriction_matrix(const Basis& b) {
  if (b.space() == Space::Yn && b.n() != 3) throw std::invalid_argument("restriction needs a threefold basis");
  QMatrix m(kNSRank, b.size());
  for (std::size_t c = 0; c < b.size(); ++c) m.set_col(c, restrict_generator(b.generators()[c]).coords());
  return m;
}

inline NSClass restrict(const DivisorClass& c) {
  return NSClass(restriction_matrix(c.basis()) * c.coeffs());
}

// ---------------------------------------------------------------------------
// The lattice spanned by the exhibited classes.

struct NSLattice {
  std::vector<NSClass> generators;
  ZMatrix doubled;  // generators scaled by 2
  HermiteForm hnf;
};

inline std::vector<Integer> doubled_coords(const NSClass& x) {
  std::vector<Integer> v(kNSRank);
  for (std::size_t i = 0; i < kNSRank; ++i) {
    Rational t = x[i] * 2;
    if (t.get_den() != 1) throw std::invalid_argument("class is not half-integral: " + x.to_string());
    v[i] = t.get_num();
  }
  return v;
}

inline NSLattice build_ns_lattice() {
  NSLattice lat;
  for (int p = 0; p < twotorsion::kPoints; ++p) lat.generators.push_back(NSClass::node(p));
  lat.generators.push_back(NSClass::lambda());
  lat.generators.push_back(ns::H_S());
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) lat.generators.push_back(ns::T(i, j));
  lat.generators.push_back(ns::R());
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      lat.generators.push_back(ns::C(i, j));
      lat.generators.push_back(ns::D(i, j));
    }
  for (const auto& g : lat.generators) lat.doubled.append_row(doubled_coords(g));
  lat.hnf = hermite_normal_form(lat.doubled);
  return lat;
}

inline std::size_t lattice_rank(const NSLattice& lat) { return lat.hnf.pivots.size(); }

/// Gram determinant of the computed lattice (informational).
inline Rational lattice_discriminant(const NSLattice& lat) {
  QMatrix basis = to_q(lat.hnf.rows).scaled(Rational(1, 2));
  return det(basis * gram_matrix() * basis.transpose());
}

inline bool lattice_member(const NSClass& x, const NSLattice& lat) {
  return hnf_contains(lat.hnf, doubled_coords(x));
}

/// Subsets M of A[2] with half the sum of their nodes inside the lattice.
inline std::vector<twotorsion::PointSet> half_subset_scan(const NSLattice& lat) {
  std::vector<twotorsion::PointSet> out;
  for (std::uint32_t s = 0; s < (1u << twotorsion::kPoints); ++s) {
    auto set = static_cast<twotorsion::PointSet>(s);
    if (lattice_member(ns::sum_nodes(set) * Rational(1, 2), lat)) out.push_back(set);
  }
  return out;
}

struct TropeIncidence {
  std::vector<std::string> trope_names;  // T01..T45 then R
  std::array<std::array<int, twotorsion::kPoints>, 16> table{};
};

inline TropeIncidence trope_incidence() {
  TropeIncidence t;
  std::vector<NSClass> tropes;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      tropes.push_back(ns::T(i, j));
      t.trope_names.push_back("T" + std::to_string(i) + std::to_string(j));
    }
  tropes.push_back(ns::R());
  t.trope_names.push_back("R");
  for (std::size_t a = 0; a < tropes.size(); ++a)
    for (int p = 0; p < twotorsion::kPoints; ++p) {
      Rational g = gram(tropes[a], NSClass::node(p));
      if (g != 0 && g != 1) throw std::logic_error("unexpected trope-node product");
      t.table[a][p] = g == 1 ? 1 : 0;
    }
  return t;
}

}  // namespace cremona
