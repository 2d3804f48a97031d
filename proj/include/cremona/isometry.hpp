#pragma once

// Keum's isometry on NS(S), the pullback eta on Pic(X), and the family F_k.

#include "cremona/linalg.hpp"
#include "cremona/nskummer.hpp"
#include "cremona/picard.hpp"
#include "cremona/rational.hpp"
#include "cremona/twotorsion.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cremona {

/// A rational matrix together with the names of its source and target bases.
struct LatticeMap {
  std::string source;
  std::string target;
  QMatrix matrix;

  std::vector<Rational> apply(const std::vector<Rational>& v) const { return matrix * v; }
};

enum class HexadVariant { H, H1 };

namespace detail {

struct NodeImage {
  const char* node;
  const char* image;   // node label of the image
  bool minus_hexad;    // image is (2 Lambda - sum over hexad) - N_image
};

inline const std::vector<NodeImage>& keum_table_H() {
  static const std::vector<NodeImage> t = {
      {"34", "34", false}, {"25", "35", false}, {"35", "24", false}, {"24", "25", false},
      {"15", "45", false}, {"45", "13", false}, {"13", "15", false}, {"23", "2", true},
      {"14", "1", true},   {"0", "12", true},   {"12", "5", true},   {"3", "14", true},
      {"4", "23", true},   {"5", "0", false},   {"1", "3", false},   {"2", "4", false},
  };
  return t;
}

inline const std::vector<NodeImage>& keum_table_H1() {
  static const std::vector<NodeImage> t = {
      {"12", "12", false}, {"2", "3", false},   {"3", "13", false},  {"13", "2", false},
      {"1", "4", false},   {"4", "24", false},  {"24", "1", false},  {"14", "25", true},
      {"23", "15", true},  {"5", "34", true},   {"34", "0", true},   {"35", "23", true},
      {"45", "14", true},  {"0", "5", false},   {"15", "35", false}, {"25", "45", false},
  };
  return t;
}

}  // namespace detail

/// Matrix of kappa^* (columns are images of Lambda, N_0, ..., N_45).
inline LatticeMap keum_matrix(HexadVariant variant = HexadVariant::H) {
  const bool h = variant == HexadVariant::H;
  twotorsion::PointSet hexad = h ? ns::hexad_H() : ns::hexad_H1();
  const auto& table = h ? detail::keum_table_H() : detail::keum_table_H1();
  NSClass hex = ns::hexad_class(hexad);
  LatticeMap m{"NS", "NS", QMatrix(kNSRank, kNSRank)};
  m.matrix.set_col(0, (NSClass::lambda() * 7 - ns::sum_nodes(hexad) * 4).coords());
  for (const auto& row : table) {
    int src = twotorsion::from_label(row.node);
    NSClass img = NSClass::node(twotorsion::from_label(row.image));
    if (row.minus_hexad) img = hex - img;
    m.matrix.set_col(1 + src, img.coords());
  }
  return m;
}

inline NSClass apply(const LatticeMap& m, const NSClass& x) { return NSClass(m.matrix * x.coords()); }

/// Images of the X generators under eta, as class names or generator symbols.
inline const std::vector<std::pair<std::string, std::string>>& eta_table() {
  static const std::vector<std::pair<std::string, std::string>> t = {
      {"H", "D"},       {"E0", "Q0"},     {"E3", "Q3"},     {"E4", "Q4"},     {"E1", "E3"},
      {"E2", "E4"},     {"E5", "E0"},     {"E05", "Q05"},   {"E13", "Q13"},   {"E24", "Q24"},
      {"E12", "Q12"},   {"E15", "Q15"},   {"E25", "Q25"},   {"E03", "E15"},   {"E04", "E25"},
      {"E34", "E12"},   {"E02", "E14"},   {"E35", "E02"},   {"E14", "E35"},   {"E45", "E01"},
      {"E23", "E45"},   {"E01", "E23"},
  };
  return t;
}

inline DivisorClass class_or_generator(const std::string& name, const Basis& b) {
  if (b.has(name)) return DivisorClass::from_terms(b, {{name, 1}});
  return classes::named(name, Basis::Y()).in_basis(b);
}

inline LatticeMap eta_matrix() {
  Basis x = Basis::X();
  LatticeMap m{"X", "X", QMatrix(x.size(), x.size())};
  for (const auto& [src, dst] : eta_table()) m.matrix.set_col(x.index(src), class_or_generator(dst, x).coeffs());
  return m;
}

inline DivisorClass apply(const LatticeMap& m, const DivisorClass& c) {
  return DivisorClass(c.basis(), m.matrix * c.coeffs());
}

inline LatticeMap eta_inverse() {
  auto inv = inverse(eta_matrix().matrix);
  if (!inv) throw std::logic_error("eta is singular");
  return {"X", "X", *inv};
}

/// r o eta and kappa^* o r as 17 x 22 matrices.
inline std::pair<QMatrix, QMatrix> intertwining_sides(const LatticeMap& eta, const LatticeMap& kappa) {
  QMatrix r = restriction_matrix(Basis::X());
  return {r * eta.matrix, kappa.matrix * r};
}

inline bool intertwine_check(const LatticeMap& eta = eta_matrix(), const LatticeMap& kappa = keum_matrix()) {
  auto [lhs, rhs] = intertwining_sides(eta, kappa);
  return lhs == rhs;
}

inline bool preserves_gram(const LatticeMap& kappa) {
  QMatrix g = gram_matrix();
  return kappa.matrix.transpose() * g * kappa.matrix == g;
}

// ---------------------------------------------------------------------------
// The family F_k.

inline DivisorClass iterate_F(int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  LatticeMap eta = eta_matrix();
  Basis x = Basis::X();
  DivisorClass c = DivisorClass::from_terms(x, {{"E03", 1}});
  for (int i = 0; i < k; ++i) c = apply(eta, c);
  return c;
}

/// All of F_1..F_kmax by repeated application.
inline std::vector<DivisorClass> iterate_F_all(int kmax) {
  if (kmax < 1) throw std::invalid_argument("k_max must be positive");
  LatticeMap eta = eta_matrix();
  DivisorClass c = DivisorClass::from_terms(Basis::X(), {{"E03", 1}});
  std::vector<DivisorClass> out;
  for (int k = 1; k <= kmax; ++k) {
    c = apply(eta, c);
    out.push_back(c);
  }
  return out;
}

struct FkCoefficients {
  Integer m;
  Integer n;
  int residue;  // k mod 3
};

/// m_j and n_j read from the residue table; j = 0 falls in the k = 3d row with d = 0.
inline FkCoefficients fk_coefficients(long j) {
  if (j < 0) throw std::invalid_argument("index must be nonnegative");
  Integer d = j / 3;
  switch (j % 3) {
    case 0: return {3 * d * d - 1, 2 * (3 * d - 1) * d, 0};
    case 1: return {d * (3 * d + 2), 2 * (3 * d + 1) * d, 1};
    default: return {(3 * d + 1) * (d + 1), 2 * (3 * d * d + 3 * d + 1), 2};
  }
}

/// Closed form of F_k. When m0 is given it replaces m_0 in the k = 1 case.
inline DivisorClass closed_form_F(long k, std::optional<Integer> m0 = std::nullopt) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  Basis y = Basis::Y();
  auto cur = fk_coefficients(k);
  Integer m_prev = (k == 1 && m0) ? *m0 : fk_coefficients(k - 1).m;
  Integer kk = k;
  DivisorClass c(y);
  c.set("H", Rational(2 * kk * (kk - 1)));
  for (int i = 0; i < 6; ++i) c.set("E" + std::to_string(i), Rational(-kk * (kk - 1)));
  for (const char* l : {"03", "04", "34"}) c.set(std::string("E") + l, Rational(-cur.m));
  for (const char* l : {"12", "15", "25"}) c.set(std::string("E") + l, Rational(-m_prev));
  for (const char* l : {"05", "13", "24"}) c.set(std::string("E") + l, Rational(-cur.n));
  std::vector<std::pair<std::string, long>> g;
  switch (cur.residue) {
    case 0: g = {{"E04", 1}, {"E34", 1}}; break;
    case 1: g = {{"E12", 1}, {"E25", 1}}; break;
    default: g = {{"E05", -1}, {"E13", -1}}; break;
  }
  c = c - DivisorClass::from_terms(y, g);
  return c.in_basis(Basis::X());
}

/// True iff the two classes are positive or negative rational multiples of each other.
inline bool proportional(const DivisorClass& a, const DivisorClass& b) {
  const auto& u = a.coeffs();
  const auto& v = b.coeffs();
  if (u.size() != v.size()) throw std::invalid_argument("size mismatch");
  // u ~ v iff all 2x2 minors vanish
  std::size_t pivot = u.size();
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[i] != 0 || v[i] != 0) {
      pivot = i;
      break;
    }
  if (pivot == u.size()) return true;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u[pivot] * v[i] != u[i] * v[pivot]) return false;
  return true;
}

/// Returns the first proportional pair (i, j) with i < j, 1-indexed, or nothing.
inline std::optional<std::pair<std::size_t, std::size_t>> first_proportional_pair(const std::vector<DivisorClass>& fs) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (proportional(fs[i], fs[j])) return std::make_pair(i + 1, j + 1);
  return std::nullopt;
}

inline bool nonproportionality_scan(int kmax) {
  if (kmax < 2) throw std::invalid_argument("K must be at least 2");
  return !first_proportional_pair(iterate_F_all(kmax)).has_value();
}

struct OrderEvidence {
  int checked = 0;
  bool kappa_power_identity = false;  // some power up to N is the identity
  bool eta_power_identity = false;
  int first_kappa_identity = 0;
  int first_eta_identity = 0;
  std::vector<Rational> eta_charpoly;
  std::vector<Rational> kappa_charpoly;
  std::vector<Integer> eta_max_entry;  // max |entry| of eta^n, n = 1..N
};

inline OrderEvidence order_evidence(int n) {
  if (n < 1) throw std::invalid_argument("N must be positive");
  OrderEvidence ev;
  ev.checked = n;
  QMatrix kappa = keum_matrix().matrix, eta = eta_matrix().matrix;
  QMatrix kp = kappa, ep = eta;
  for (int i = 1; i <= n; ++i) {
    if (!ev.kappa_power_identity && kp.is_identity()) {
      ev.kappa_power_identity = true;
      ev.first_kappa_identity = i;
    }
    if (!ev.eta_power_identity && ep.is_identity()) {
      ev.eta_power_identity = true;
      ev.first_eta_identity = i;
    }
    Integer mx = 0;
    for (std::size_t r = 0; r < ep.rows(); ++r)
      for (std::size_t c = 0; c < ep.cols(); ++c) {
        Integer a = abs(ep(r, c).get_num());
        if (a > mx) mx = a;
      }
    ev.eta_max_entry.push_back(mx);
    kp = kp * kappa;
    ep = ep * eta;
  }
  ev.eta_charpoly = charpoly(eta);
  ev.kappa_charpoly = charpoly(kappa);
  return ev;
}

/// eta^{-1}(H) = D'.
inline bool dual_check() {
  Basis x = Basis::X();
  DivisorClass h = DivisorClass::from_terms(x, {{"H", 1}});
  return apply(eta_inverse(), h) == classes::D_dual(Basis::Y()).in_basis(x);
}

}  // namespace cremona
