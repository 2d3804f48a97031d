#pragma once

// Sparse multivariate polynomials with exact coefficients. Up to four
// variables; exponents are packed 16 bits each into one 64-bit key so that the
// key order is lexicographic with the first variable most significant.

#include "cremona/linalg.hpp"
#include "cremona/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cremona {

using Monomial = std::uint64_t;
inline constexpr int kMaxVars = 4;
using Exponents = std::array<int, kMaxVars>;

inline Monomial pack(const Exponents& e) {
  Monomial m = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    if (e[i] < 0 || e[i] > 0xffff) throw std::overflow_error("exponent out of range");
    m |= static_cast<Monomial>(e[i]) << (16 * (kMaxVars - 1 - i));
  }
  return m;
}

inline Exponents unpack(Monomial m) {
  Exponents e{};
  for (int i = 0; i < kMaxVars; ++i) e[i] = static_cast<int>((m >> (16 * (kMaxVars - 1 - i))) & 0xffff);
  return e;
}

inline int total_degree(Monomial m) {
  auto e = unpack(m);
  return e[0] + e[1] + e[2] + e[3];
}

/// True iff every exponent of b is at most the matching exponent of a.
inline bool divides(Monomial b, Monomial a) {
  auto ea = unpack(a), eb = unpack(b);
  for (int i = 0; i < kMaxVars; ++i)
    if (eb[i] > ea[i]) return false;
  return true;
}

template <class T>
class BasicPoly {
 public:
  using Terms = std::map<Monomial, T>;

  BasicPoly() = default;
  explicit BasicPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("1 to 4 variables supported");
  }

  static BasicPoly constant(int nvars, const T& c) {
    BasicPoly p(nvars);
    if (c != 0) p.terms_[0] = c;
    return p;
  }
  static BasicPoly variable(int nvars, int i) {
    BasicPoly p(nvars);
    Exponents e{};
    e.at(i) = 1;
    p.terms_[pack(e)] = 1;
    return p;
  }
  static BasicPoly monomial(int nvars, const Exponents& e, const T& c = T(1)) {
    BasicPoly p(nvars);
    if (c != 0) p.terms_[pack(e)] = c;
    return p;
  }
  /// Linear form sum c_i x_i.
  static BasicPoly linear(const std::vector<T>& c) {
    BasicPoly p(static_cast<int>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) {
        Exponents e{};
        e[i] = 1;
        p.terms_[pack(e)] = c[i];
      }
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  T coeff(const Exponents& e) const {
    auto it = terms_.find(pack(e));
    return it == terms_.end() ? T(0) : it->second;
  }
  void add_term(Monomial m, const T& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }
  int min_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = d < 0 ? total_degree(m) : std::min(d, total_degree(m));
    return d;
  }
  bool is_homogeneous() const { return terms_.empty() || degree() == min_degree(); }

  BasicPoly homogeneous_part(int d) const {
    BasicPoly p(nvars_);
    for (const auto& [m, c] : terms_)
      if (total_degree(m) == d) p.terms_.emplace_hint(p.terms_.end(), m, c);
    return p;
  }

  /// Leading term in lex order.
  std::pair<Monomial, T> leading() const {
    if (terms_.empty()) throw std::logic_error("zero polynomial has no leading term");
    return *terms_.rbegin();
  }

  BasicPoly operator+(const BasicPoly& o) const {
    check(o);
    BasicPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  BasicPoly operator-(const BasicPoly& o) const {
    check(o);
    BasicPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
  }
  BasicPoly operator-() const {
    BasicPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  BasicPoly operator*(const T& s) const {
    if (s == 0) return BasicPoly(nvars_);
    BasicPoly r = *this;
    for (auto& [m, c] : r.terms_) c *= s;
    return r;
  }
  BasicPoly operator*(const BasicPoly& o) const {
    check(o);
    if (terms_.empty() || o.terms_.empty()) return BasicPoly(nvars_);
    std::unordered_map<Monomial, T> acc;
    acc.reserve(terms_.size() * o.terms_.size() / 4 + 16);
    T prod;
    for (const auto& [ma, ca] : terms_)
      for (const auto& [mb, cb] : o.terms_) {
        prod = ca * cb;
        auto [it, fresh] = acc.try_emplace(ma + mb, prod);
        if (!fresh) it->second += prod;
      }
    std::vector<std::pair<Monomial, T>> sorted;
    sorted.reserve(acc.size());
    for (auto& kv : acc)
      if (kv.second != 0) sorted.emplace_back(kv.first, std::move(kv.second));
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    BasicPoly r(nvars_);
    for (auto& kv : sorted) r.terms_.emplace_hint(r.terms_.end(), kv.first, std::move(kv.second));
    return r;
  }
  BasicPoly& operator+=(const BasicPoly& o) { return *this = *this + o; }
  BasicPoly& operator-=(const BasicPoly& o) { return *this = *this - o; }
  BasicPoly& operator*=(const BasicPoly& o) { return *this = *this * o; }

  bool operator==(const BasicPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const BasicPoly& o) const { return !(*this == o); }

  BasicPoly pow(unsigned e) const {
    BasicPoly r = constant(nvars_, T(1)), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

  BasicPoly derivative(int var) const {
    BasicPoly r(nvars_);
    for (const auto& [m, c] : terms_) {
      auto e = unpack(m);
      if (e.at(var) == 0) continue;
      T k = c * e[var];
      --e[var];
      r.add_term(pack(e), k);
    }
    return r;
  }

  /// Evaluates at a point with coefficients of a possibly wider type.
  template <class U>
  U eval(const std::vector<U>& x) const {
    if (static_cast<int>(x.size()) != nvars_) throw std::invalid_argument("point dimension mismatch");
    const int deg = std::max(degree(), 0);
    std::vector<std::vector<U>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      powers[i].resize(deg + 1);
      powers[i][0] = 1;
      for (int k = 1; k <= deg; ++k) powers[i][k] = powers[i][k - 1] * x[i];
    }
    U sum = 0, term;
    for (const auto& [m, c] : terms_) {
      auto e = unpack(m);
      term = U(c);
      for (int i = 0; i < nvars_; ++i)
        if (e[i]) term *= powers[i][e[i]];
      sum += term;
    }
    return sum;
  }

  /// Substitutes polynomials for the variables.
  BasicPoly compose(const std::vector<BasicPoly>& subs) const {
    if (static_cast<int>(subs.size()) != nvars_) throw std::invalid_argument("substitution arity mismatch");
    const int target = subs.empty() ? 1 : subs[0].nvars();
    const int deg = std::max(degree(), 0);
    std::vector<std::vector<BasicPoly>> powers(nvars_);
    for (int i = 0; i < nvars_; ++i) {
      powers[i].push_back(constant(target, T(1)));
      for (int k = 1; k <= deg; ++k) powers[i].push_back(powers[i].back() * subs[i]);
    }
    BasicPoly r(target);
    for (const auto& [m, c] : terms_) {
      auto e = unpack(m);
      BasicPoly t = constant(target, c);
      for (int i = 0; i < nvars_; ++i)
        if (e[i]) t = t * powers[i][e[i]];
      r += t;
    }
    return r;
  }

  /// Exact quotient by d, or nothing when d does not divide.
  std::optional<BasicPoly> divide_exact(const BasicPoly& d) const {
    check(d);
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    auto [ld, lc] = d.leading();
    BasicPoly rem = *this, quot(nvars_);
    while (!rem.is_zero()) {
      auto [lm, c] = rem.leading();
      if (!divides(ld, lm)) return std::nullopt;
      T q = c / lc;
      if constexpr (std::is_same_v<T, Integer>) {
        if (c % lc != 0) return std::nullopt;
      }
      Monomial qm = lm - ld;
      quot.add_term(qm, q);
      BasicPoly step(nvars_);
      for (const auto& [m, cc] : d.terms_) step.terms_.emplace_hint(step.terms_.end(), m + qm, cc * q);
      rem -= step;
    }
    return quot;
  }

  /// Content: first nonzero coefficient in lex order from the top.
  T leading_coeff() const { return leading().second; }

  std::string to_string(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      std::string cs = c.get_str();
      bool neg = c < 0;
      if (!out.empty()) out += neg ? " - " : " + ";
      else if (neg) out += "-";
      std::string mag = neg ? cs.substr(1) : cs;
      auto e = unpack(m);
      std::string mono;
      for (int i = 0; i < nvars_; ++i) {
        if (!e[i]) continue;
        if (!mono.empty()) mono += "*";
        mono += i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i);
        if (e[i] > 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) out += mag;
      else if (mag == "1") out += mono;
      else out += mag + "*" + mono;
    }
    return out;
  }

 private:
  void check(const BasicPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("polynomials live in different rings");
  }
  int nvars_ = 4;
  Terms terms_;
};

using Poly = BasicPoly<Rational>;
using IntPoly = BasicPoly<Integer>;

inline Poly operator*(const Rational& s, const Poly& p) { return p * s; }

/// Variables x0..x3 of P^3.
inline Poly var(int i, int nvars = 4) { return Poly::variable(nvars, i); }
inline Poly constant(const Rational& c, int nvars = 4) { return Poly::constant(nvars, c); }

/// Scales to a primitive integer polynomial; returns it with the factor used.
inline std::pair<IntPoly, Rational> to_integer(const Poly& p) {
  Integer l = 1, g = 0;
  for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    Integer z = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    r.add_term(m, z);
  }
  if (g > 1) {
    IntPoly s(p.nvars());
    for (const auto& [m, c] : r.terms()) s.add_term(m, c / g);
    r = s;
  }
  return {r, g == 0 ? Rational(0) : Rational(g, l)};
}

inline Poly to_rational(const IntPoly& p) {
  Poly r(p.nvars());
  for (const auto& [m, c] : p.terms()) r.add_term(m, Rational(c));
  return r;
}

/// Scales so that the leading (lex-largest) coefficient is 1.
inline Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * (Rational(1) / p.leading_coeff());
}

/// If a = lambda * b for a nonzero rational lambda, returns lambda.
inline std::optional<Rational> proportionality(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  if (a.size() != b.size()) return std::nullopt;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  Rational lambda = ia->second / ib->second;
  for (; ia != a.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return std::nullopt;
    if (ia->second != lambda * ib->second) return std::nullopt;
  }
  return lambda;
}

/// All exponent vectors of total degree d in n variables, in descending lex order.
inline std::vector<Exponents> monomials_of_degree(int n, int d) {
  std::vector<Exponents> out;
  Exponents e{};
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
    e[i] = 0;
  };
  if (n >= 1) rec(rec, 0, d);
  return out;
}

/// Builds a polynomial from coefficients against a monomial list.
inline Poly from_coefficients(int nvars, const std::vector<Exponents>& monos, const std::vector<Rational>& c) {
  Poly p(nvars);
  for (std::size_t i = 0; i < monos.size(); ++i) p.add_term(pack(monos[i]), c[i]);
  return p;
}

/// Coefficient vector against a monomial list (throws if a term is outside it).
inline std::vector<Rational> coefficients(const Poly& p, const std::vector<Exponents>& monos) {
  std::map<Monomial, std::size_t> idx;
  for (std::size_t i = 0; i < monos.size(); ++i) idx[pack(monos[i])] = i;
  std::vector<Rational> c(monos.size());
  for (const auto& [m, v] : p.terms()) {
    auto it = idx.find(m);
    if (it == idx.end()) throw std::invalid_argument("polynomial has a term outside the monomial list");
    c[it->second] = v;
  }
  return c;
}

/// Rank of a family of polynomials over Q.
inline std::size_t poly_rank(const std::vector<Poly>& ps) {
  if (ps.empty()) return 0;
  std::map<Monomial, std::size_t> idx;
  for (const auto& p : ps)
    for (const auto& [m, c] : p.terms()) idx.try_emplace(m, idx.size());
  QMatrix a(ps.size(), idx.size());
  for (std::size_t r = 0; r < ps.size(); ++r)
    for (const auto& [m, c] : ps[r].terms()) a(r, idx[m]) = c;
  return rank(a);
}

/// Coefficients expressing target in the span of basis, or nothing.
inline std::optional<std::vector<Rational>> express_in_span(const Poly& target, const std::vector<Poly>& basis) {
  std::map<Monomial, std::size_t> idx;
  for (const auto& p : basis)
    for (const auto& [m, c] : p.terms()) idx.try_emplace(m, idx.size());
  for (const auto& [m, c] : target.terms())
    if (!idx.count(m)) return std::nullopt;
  // columns: basis elements, then -target; kernel vector with last entry 1
  QMatrix a(idx.size(), basis.size() + 1);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (const auto& [m, c] : basis[j].terms()) a(idx[m], j) = c;
  for (const auto& [m, c] : target.terms()) a(idx[m], basis.size()) = -c;
  for (const auto& v : nullspace(a))
    if (v.back() != 0) {
      std::vector<Rational> out(basis.size());
      for (std::size_t j = 0; j < basis.size(); ++j) out[j] = v[j] / v.back();
      return out;
    }
  return std::nullopt;
}

}  // namespace cremona
