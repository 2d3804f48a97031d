#pragma once

// Picard groups of the blow-ups of P^3 (and P^n) at points and lines, with the
// named divisor classes used by the degree-13 construction.

#include "cremona/linalg.hpp"
#include "cremona/rational.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cremona {

/// The nine blown-up lines of Y, in canonical order.
inline const std::vector<std::string>& y_lines() {
  static const std::vector<std::string> v = {"03", "04", "34", "12", "15", "25", "05", "13", "24"};
  return v;
}

/// The six further lines of X.
inline const std::vector<std::string>& x_extra_lines() {
  static const std::vector<std::string> v = {"01", "02", "14", "23", "35", "45"};
  return v;
}

inline std::string line_label(int i, int j) {
  if (i == j) throw std::invalid_argument("line needs two distinct points");
  if (i > j) std::swap(i, j);
  return std::to_string(i) + std::to_string(j);
}

enum class Space { X, Y, Yn };

class Basis {
 public:
  static Basis make(Space space, int n = 3) {
    if (space == Space::Yn && n < 3) throw std::invalid_argument("Yn needs n >= 3");
    Basis b;
    b.space_ = space;
    b.n_ = (space == Space::Yn) ? n : 3;
    b.gens_.push_back("H");
    for (int i = 0; i < b.n_ + 3; ++i) b.gens_.push_back("E" + std::to_string(i));
    for (const auto& l : y_lines()) b.gens_.push_back("E" + l);
    if (space == Space::X)
      for (const auto& l : x_extra_lines()) b.gens_.push_back("E" + l);
    for (std::size_t i = 0; i < b.gens_.size(); ++i) b.index_[b.gens_[i]] = i;
    return b;
  }
  static Basis X() { return make(Space::X); }
  static Basis Y() { return make(Space::Y); }
  static Basis Yn(int n) { return make(Space::Yn, n); }

  Space space() const { return space_; }
  int n() const { return n_; }
  std::size_t size() const { return gens_.size(); }
  int point_count() const { return n_ + 3; }
  const std::vector<std::string>& generators() const { return gens_; }

  std::string tag() const {
    switch (space_) {
      case Space::X: return "X";
      case Space::Y: return "Y";
      case Space::Yn: return "Yn(" + std::to_string(n_) + ")";
    }
    return "?";
  }

  bool has(const std::string& sym) const { return index_.count(sym) != 0; }
  std::size_t index(const std::string& sym) const {
    auto it = index_.find(sym);
    if (it == index_.end()) throw std::invalid_argument("generator " + sym + " not in basis " + tag());
    return it->second;
  }
  bool has_line(int i, int j) const { return has("E" + line_label(i, j)); }

  bool operator==(const Basis& o) const { return space_ == o.space_ && n_ == o.n_; }
  bool operator!=(const Basis& o) const { return !(*this == o); }

 private:
  Space space_ = Space::X;
  int n_ = 3;
  std::vector<std::string> gens_;
  std::map<std::string, std::size_t> index_;
};

class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(Basis basis) : basis_(std::move(basis)), coeffs_(basis_.size()) {}
  DivisorClass(Basis basis, std::vector<Rational> coeffs) : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != basis_.size()) throw std::invalid_argument("coefficient count does not match basis");
  }

  /// Builds a class from (symbol, coefficient) terms; repeated symbols add up.
  static DivisorClass from_terms(const Basis& basis, const std::vector<std::pair<std::string, long>>& terms) {
    DivisorClass c(basis);
    for (const auto& [sym, k] : terms) c.coeffs_[basis.index(sym)] += k;
    return c;
  }

  const Basis& basis() const { return basis_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  Rational coeff(const std::string& sym) const {
    return basis_.has(sym) ? coeffs_[basis_.index(sym)] : Rational(0);
  }
  void set(const std::string& sym, const Rational& v) { coeffs_[basis_.index(sym)] = v; }

  Rational degree() const { return coeffs_.at(0); }

  bool is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q.get_den() == 1; });
  }
  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
  }

  DivisorClass operator+(const DivisorClass& o) const {
    check_same(o);
    DivisorClass r = *this;
    for (std::size_t i = 0; i < size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
  }
  DivisorClass operator-(const DivisorClass& o) const {
    check_same(o);
    DivisorClass r = *this;
    for (std::size_t i = 0; i < size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    return r;
  }
  DivisorClass operator-() const {
    DivisorClass r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  DivisorClass operator*(const Rational& s) const {
    DivisorClass r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }
  bool operator==(const DivisorClass& o) const { return basis_ == o.basis_ && coeffs_ == o.coeffs_; }
  bool operator!=(const DivisorClass& o) const { return !(*this == o); }
  bool operator<(const DivisorClass& o) const { return coeffs_ < o.coeffs_; }

  /// Re-expresses the class over another basis: matching generators copy, missing
  /// ones must be zero in the source and are zero in the target.
  DivisorClass in_basis(const Basis& target) const {
    DivisorClass r(target);
    for (std::size_t i = 0; i < size(); ++i) {
      const auto& sym = basis_.generators()[i];
      if (target.has(sym)) r.coeffs_[target.index(sym)] = coeffs_[i];
      else if (coeffs_[i] != 0)
        throw std::invalid_argument("class has nonzero " + sym + " which is absent from " + target.tag());
    }
    return r;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (coeffs_[i] == 0) continue;
      std::string c = coeffs_[i].get_str();
      if (!out.empty() && coeffs_[i] > 0) out += "+";
      if (coeffs_[i] == 1) c = "";
      else if (coeffs_[i] == -1) c = "-";
      out += c + basis_.generators()[i];
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check_same(const DivisorClass& o) const {
    if (basis_ != o.basis_) throw std::invalid_argument("classes live on different bases");
  }
  Basis basis_;
  std::vector<Rational> coeffs_;
};

namespace classes {

using Terms = std::vector<std::pair<std::string, long>>;

inline Terms points(std::initializer_list<int> idx, long k) {
  Terms t;
  for (int i : idx) t.emplace_back("E" + std::to_string(i), k);
  return t;
}
inline Terms lines(std::initializer_list<const char*> ls, long k) {
  Terms t;
  for (const char* l : ls) t.emplace_back(std::string("E") + l, k);
  return t;
}
inline Terms join(std::initializer_list<Terms> parts) {
  Terms out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

inline DivisorClass make(const Basis& b, const Terms& t) { return DivisorClass::from_terms(b, t); }

inline DivisorClass D(const Basis& b) {
  return make(b, join({{{"H", 13}}, points({1, 2, 5}, -7), points({0, 3, 4}, -5), lines({"03", "04", "34"}, -3),
                       lines({"05", "13", "24"}, -4), lines({"12", "15", "25"}, -1)}));
}

inline DivisorClass D_dual(const Basis& b) {
  return make(b, join({{{"H", 13}}, points({1, 2, 5}, -5), points({0, 3, 4}, -7), lines({"03", "04", "34"}, -1),
                       lines({"05", "13", "24"}, -4), lines({"12", "15", "25"}, -3)}));
}

inline DivisorClass A(const Basis& b) {
  return make(b, join({{{"H", 4}}, points({0, 1, 2, 3, 4, 5}, -2), lines({"03", "04", "34"}, -1),
                       lines({"05", "13", "24"}, -1)}));
}

inline DivisorClass B(const Basis& b) {
  return make(b, join({{{"H", 4}}, points({0, 1, 2, 3, 4, 5}, -2), lines({"12", "15", "25"}, -1),
                       lines({"05", "13", "24"}, -1)}));
}

inline DivisorClass anticanonical(const Basis& b) {
  if (b.space() != Space::X) throw std::invalid_argument("anticanonical class is defined on X");
  DivisorClass c(b);
  c.set("H", 4);
  for (int i = 0; i < 6; ++i) c.set("E" + std::to_string(i), -2);
  for (const auto& l : y_lines()) c.set("E" + l, -1);
  for (const auto& l : x_extra_lines()) c.set("E" + l, -1);
  return c;
}

inline DivisorClass line_generator(const Basis& b, const std::string& label) {
  return make(b, {{"E" + label, 1}});
}

/// Labels of the quartics Q and of the dual quartics P.
inline const std::vector<std::string>& quartic_labels() {
  static const std::vector<std::string> v = {"0", "3", "4", "12", "15", "25", "05", "13", "24"};
  return v;
}
inline const std::vector<std::string>& dual_quartic_labels() {
  static const std::vector<std::string> v = {"1", "2", "5", "03", "04", "34", "05", "13", "24"};
  return v;
}

inline DivisorClass Q(const std::string& alpha, const Basis& b) {
  if (alpha == "0")
    return make(b, join({{{"H", 4}}, points({0, 1, 2}, -2), points({3, 4}, -1), points({5}, -3),
                         lines({"03", "04", "13", "24", "15", "25"}, -1), lines({"05"}, -2)}));
  if (alpha == "3")
    return make(b, join({{{"H", 4}}, points({0, 4}, -1), points({3, 2, 5}, -2), points({1}, -3),
                         lines({"03", "34", "05", "24", "12", "15"}, -1), lines({"13"}, -2)}));
  if (alpha == "4")
    return make(b, join({{{"H", 4}}, points({0, 3}, -1), points({4, 1, 5}, -2), points({2}, -3),
                         lines({"04", "34", "05", "13", "12", "25"}, -1), lines({"24"}, -2)}));
  static const std::map<std::string, std::string> drop = {{"05", "34"}, {"13", "04"}, {"24", "03"},
                                                          {"12", "05"}, {"15", "24"}, {"25", "13"}};
  auto it = drop.find(alpha);
  if (it == drop.end()) throw std::invalid_argument("unknown quartic label " + alpha);
  return A(b) - line_generator(b, it->second);
}

/// The dual quartic classes exactly as printed. The three with a triple point
/// each list one line that the index switch does not produce; see P().
inline DivisorClass P_displayed(const std::string& beta, const Basis& b) {
  if (beta == "1")
    return make(b, join({{{"H", 4}}, points({1, 0, 4}, -2), points({2, 5}, -1), points({3}, -3),
                         lines({"12", "15", "05", "24", "03", "04"}, -1), lines({"13"}, -2)}));
  if (beta == "2")
    return make(b, join({{{"H", 4}}, points({2, 0, 3}, -2), points({1, 5}, -1), points({4}, -3),
                         lines({"12", "25", "05", "13", "03", "34"}, -1), lines({"24"}, -2)}));
  if (beta == "5")
    return make(b, join({{{"H", 4}}, points({5, 3, 4}, -2), points({1, 2}, -1), points({0}, -3),
                         lines({"15", "25", "13", "24", "04", "34"}, -1), lines({"05"}, -2)}));
  static const std::map<std::string, std::string> drop = {{"05", "12"}, {"13", "25"}, {"24", "15"},
                                                          {"34", "05"}, {"03", "24"}, {"04", "13"}};
  auto it = drop.find(beta);
  if (it == drop.end()) throw std::invalid_argument("unknown dual quartic label " + beta);
  return B(b) - line_generator(b, it->second);
}

/// The six quintic classes; names D05, D13, D24, F15, F25, F12.
inline DivisorClass quintic(const std::string& name, const Basis& b) {
  DivisorClass base = A(b) + make(b, {{"H", 1}});
  static const std::map<std::string, Terms> extra = {
      {"D05", join({points({0, 5}, -1), lines({"03", "04", "05"}, -1)})},
      {"D13", join({points({1, 3}, -1), lines({"03", "34", "13"}, -1)})},
      {"D24", join({points({2, 4}, -1), lines({"04", "34", "24"}, -1)})},
      {"F15", join({points({1, 5}, -1), lines({"05", "13", "15"}, -1)})},
      {"F25", join({points({2, 5}, -1), lines({"05", "24", "25"}, -1)})},
      {"F12", join({points({1, 2}, -1), lines({"13", "24", "12"}, -1)})},
  };
  auto it = extra.find(name);
  if (it == extra.end()) throw std::invalid_argument("unknown quintic " + name);
  return base + make(b, it->second);
}

inline const std::vector<std::string>& quintic_names() {
  static const std::vector<std::string> v = {"D05", "D13", "D24", "F15", "F25", "F12"};
  return v;
}

/// Proper transform of the plane through p_i, p_j, p_k: every present line
/// among the three points is subtracted as well.
inline DivisorClass plane(int i, int j, int k, const Basis& b) {
  DivisorClass c = make(b, {{"H", 1}, {"E" + std::to_string(i), -1}, {"E" + std::to_string(j), -1},
                            {"E" + std::to_string(k), -1}});
  for (auto [u, v] : std::array<std::pair<int, int>, 3>{{{i, j}, {i, k}, {j, k}}})
    if (b.has_line(u, v)) c.set("E" + line_label(u, v), c.coeff("E" + line_label(u, v)) - 1);
  return c;
}

}  // namespace classes

// ---------------------------------------------------------------------------
// Index permutations acting on classes.

using PointPermutation = std::array<int, 6>;

inline DivisorClass permute(const DivisorClass& c, const PointPermutation& perm) {
  const Basis& b = c.basis();
  DivisorClass out(b);
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::string& g = b.generators()[i];
    if (c.coeffs()[i] == 0) continue;
    std::string image;
    if (g == "H") image = "H";
    else if (g.size() == 2) image = "E" + std::to_string(perm.at(g[1] - '0'));
    else image = "E" + line_label(perm.at(g[1] - '0'), perm.at(g[2] - '0'));
    if (!b.has(image)) throw std::invalid_argument("permutation leaves the basis: " + g + " -> " + image);
    out.set(image, out.coeff(image) + c.coeffs()[i]);
  }
  return out;
}

/// Cyclic generator of the S3 action: (5,0) -> (1,3) -> (2,4) -> (5,0).
inline constexpr PointPermutation kS3Cycle = {3, 2, 5, 4, 0, 1};
/// Transposition of the first two ordered pairs: (5,0) <-> (1,3).
inline constexpr PointPermutation kS3Swap = {3, 5, 2, 0, 4, 1};
/// Index swap 1<->3, 2<->4, 0<->5 relating a class to its dual.
inline constexpr PointPermutation kDualSwap = {5, 3, 4, 1, 2, 0};

inline PointPermutation compose(const PointPermutation& a, const PointPermutation& b) {
  PointPermutation r{};
  for (int i = 0; i < 6; ++i) r[i] = a[b[i]];
  return r;
}

inline std::vector<PointPermutation> s3_elements() {
  PointPermutation id = {0, 1, 2, 3, 4, 5};
  PointPermutation c2 = compose(kS3Cycle, kS3Cycle);
  return {id, kS3Cycle, c2, kS3Swap, compose(kS3Swap, kS3Cycle), compose(kS3Swap, c2)};
}

inline std::set<DivisorClass> s3_orbit(const DivisorClass& c) {
  std::set<DivisorClass> orbit;
  for (const auto& g : s3_elements()) orbit.insert(permute(c, g));
  return orbit;
}

namespace classes {

/// Label of Q_alpha under the switch 1<->3, 2<->4, 0<->5.
inline std::string switch_label(const std::string& label) {
  std::string out;
  for (char ch : label) out += static_cast<char>('0' + kDualSwap.at(ch - '0'));
  if (out.size() == 2 && out[0] > out[1]) std::swap(out[0], out[1]);
  return out;
}

/// Dual quartic class: the index switch applied to Q of the switched label.
inline DivisorClass P(const std::string& beta, const Basis& b) {
  const auto& labels = dual_quartic_labels();
  if (std::find(labels.begin(), labels.end(), beta) == labels.end())
    throw std::invalid_argument("unknown dual quartic label " + beta);
  return permute(Q(switch_label(beta), b), kDualSwap);
}

/// Looks up any class by name: D, D', A, B, -K, Q<alpha>, P<beta>, D05.., F15..
inline DivisorClass named(const std::string& name, const Basis& b) {
  if (name == "D") return D(b);
  if (name == "D'") return D_dual(b);
  if (name == "A") return A(b);
  if (name == "B") return B(b);
  if (name == "-K") return anticanonical(b);
  if (name.size() > 1 && name[0] == 'Q') return Q(name.substr(1), b);
  if (name.size() > 1 && name[0] == 'P') return P(name.substr(1), b);
  if (name.size() == 3 && (name[0] == 'D' || name[0] == 'F')) return quintic(name, b);
  throw std::invalid_argument("unknown class name " + name);
}

/// Multiplicity of E_alpha in P_beta (a nonnegative integer).
inline long fusion_exponent(const std::string& alpha, const std::string& beta) {
  Basis y = Basis::Y();
  Rational c = -P(beta, y).coeff("E" + alpha);
  return c.get_num().get_si();
}

}  // namespace classes

// ---------------------------------------------------------------------------
// Restrictions to exceptional divisors of Y.

/// Restriction to E_12 = P^1 x P^1, returned as (coefficient of e, coefficient of f).
inline std::pair<Rational, Rational> restrict_to_line_divisor_12(const DivisorClass& c) {
  Rational f = c.coeff("H") + c.coeff("E1") + c.coeff("E2");
  Rational l = c.coeff("E12");
  return {-l, f - l};
}

/// Restriction to E_4 (P^2 blown up at the three points over lines 04, 24, 34),
/// returned as coefficients of (h, e0, e2, e3).
inline std::array<Rational, 4> restrict_to_point_divisor_4(const DivisorClass& c) {
  return {-c.coeff("E4"), c.coeff("E04"), c.coeff("E24"), c.coeff("E34")};
}

}  // namespace cremona
