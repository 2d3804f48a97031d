#pragma once

// Expression trees over polynomials and randomized / expanded identity tests
// up to a global scalar.

#include "cremona/linalg.hpp"
#include "cremona/poly.hpp"

#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cremona {

/// Determinant of the Jacobian matrix (d f_i / d x_j), exact.
inline Poly jacobian_det(const std::vector<Poly>& fs) {
  const std::size_t n = fs.size();
  if (n == 0 || static_cast<int>(n) != fs[0].nvars()) throw std::invalid_argument("need one polynomial per variable");
  // Integer rows: scale each row of partials by a common factor.
  std::vector<std::vector<IntPoly>> rows(n);
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    auto [fi, s] = to_integer(fs[i]);
    if (fi.is_zero()) return Poly(fs[0].nvars());
    scale *= s;
    for (std::size_t j = 0; j < n; ++j) rows[i].push_back(fi.derivative(static_cast<int>(j)));
  }
  // Laplace expansion along rows, memoized on column subsets.
  std::vector<std::vector<IntPoly>> minors(n + 1, std::vector<IntPoly>(1u << n));
  std::vector<std::vector<bool>> have(n + 1, std::vector<bool>(1u << n, false));
  const int nv = fs[0].nvars();
  auto rec = [&](auto&& self, std::size_t row, unsigned cols) -> IntPoly {
    if (row == n) return IntPoly::constant(nv, Integer(1));
    if (have[row][cols]) return minors[row][cols];
    IntPoly sum(nv);
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(cols & (1u << j))) continue;
      if (!rows[row][j].is_zero()) {
        IntPoly sub = self(self, row + 1, cols & ~(1u << j));
        IntPoly term = rows[row][j] * sub;
        sum = sign > 0 ? sum + term : sum - term;
      }
      sign = -sign;
    }
    have[row][cols] = true;
    minors[row][cols] = sum;
    return sum;
  };
  IntPoly d = rec(rec, 0, (1u << n) - 1);
  return to_rational(d) * scale;
}

/// Determinant of the Jacobian evaluated at a point, from the derivative polynomials.
inline Rational jacobian_det_at(const std::vector<std::vector<Poly>>& partials, const std::vector<Rational>& x) {
  const std::size_t n = partials.size();
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = partials[i][j].eval(x);
  return det(m);
}

inline std::vector<std::vector<Poly>> jacobian_partials(const std::vector<Poly>& fs) {
  std::vector<std::vector<Poly>> out;
  for (const auto& f : fs) {
    std::vector<Poly> row;
    for (int j = 0; j < f.nvars(); ++j) row.push_back(f.derivative(j));
    out.push_back(row);
  }
  return out;
}

// ---------------------------------------------------------------------------

class Expr {
 public:
  enum class Kind { Leaf, Product, Compose, Jacobian };

  static Expr leaf(Poly p) {
    Expr e(Kind::Leaf, p.nvars());
    e.node_->poly = std::move(p);
    return e;
  }
  /// scalar * prod factor_i^exp_i
  static Expr product(std::vector<std::pair<Expr, unsigned>> factors, Rational scalar = 1) {
    if (factors.empty()) throw std::invalid_argument("empty product");
    Expr e(Kind::Product, factors[0].first.nvars());
    for (const auto& [f, k] : factors)
      if (f.nvars() != e.nvars()) throw std::invalid_argument("factors live in different rings");
    e.node_->factors = std::move(factors);
    e.node_->scalar = std::move(scalar);
    return e;
  }
  static Expr product(const std::vector<Poly>& polys) {
    std::vector<std::pair<Expr, unsigned>> f;
    for (const auto& p : polys) f.emplace_back(leaf(p), 1);
    return product(std::move(f));
  }
  /// outer(inner_0, ..., inner_{k-1})
  static Expr compose(Poly outer, std::vector<Expr> inner) {
    if (static_cast<int>(inner.size()) != outer.nvars()) throw std::invalid_argument("composition arity mismatch");
    Expr e(Kind::Compose, inner.at(0).nvars());
    e.node_->poly = std::move(outer);
    e.node_->args = std::move(inner);
    return e;
  }
  static Expr jacobian(const std::vector<Poly>& fs) {
    Expr e(Kind::Jacobian, fs.at(0).nvars());
    e.node_->partials = jacobian_partials(fs);
    e.node_->jac_sources = fs;
    return e;
  }

  Kind kind() const { return node_->kind; }
  int nvars() const { return node_->nvars; }

  Rational eval(const std::vector<Rational>& x) const {
    const Node& n = *node_;
    switch (n.kind) {
      case Kind::Leaf: return n.poly.eval(x);
      case Kind::Product: {
        Rational r = n.scalar;
        for (const auto& [f, k] : n.factors) {
          Rational v = f.eval(x);
          if (v == 0) return 0;
          Rational p;
          mpz_pow_ui(p.get_num_mpz_t(), v.get_num_mpz_t(), k);
          mpz_pow_ui(p.get_den_mpz_t(), v.get_den_mpz_t(), k);
          r *= p;
        }
        return r;
      }
      case Kind::Compose: {
        std::vector<Rational> y;
        for (const auto& a : n.args) y.push_back(a.eval(x));
        return n.poly.eval(y);
      }
      case Kind::Jacobian: return jacobian_det_at(n.partials, x);
    }
    return 0;
  }

  /// Full expansion; throws when an intermediate exceeds max_terms.
  Poly expand(std::size_t max_terms = 5'000'000) const {
    const Node& n = *node_;
    auto guard = [&](const Poly& p) {
      if (p.size() > max_terms) throw std::length_error("expansion memory cap exceeded");
      return p;
    };
    switch (n.kind) {
      case Kind::Leaf: return n.poly;
      case Kind::Product: {
        Poly r = Poly::constant(n.nvars, n.scalar);
        for (const auto& [f, k] : n.factors) {
          Poly fe = f.expand(max_terms);
          for (unsigned i = 0; i < k; ++i) r = guard(r * fe);
        }
        return r;
      }
      case Kind::Compose: {
        std::vector<Poly> subs;
        for (const auto& a : n.args) subs.push_back(a.expand(max_terms));
        return guard(n.poly.compose(subs));
      }
      case Kind::Jacobian: return guard(jacobian_det(n.jac_sources));
    }
    return Poly(n.nvars);
  }

 private:
  struct Node {
    Kind kind = Kind::Leaf;
    int nvars = 4;
    Poly poly;
    Rational scalar = 1;
    std::vector<std::pair<Expr, unsigned>> factors;
    std::vector<Expr> args;
    std::vector<std::vector<Poly>> partials;
    std::vector<Poly> jac_sources;
  };
  Expr(Kind k, int nvars) : node_(std::make_shared<Node>()) {
    node_->kind = k;
    node_->nvars = nvars;
  }
  std::shared_ptr<Node> node_;
};

enum class CheckMode { Sample, Expand };

inline CheckMode parse_mode(const std::string& s) {
  if (s == "sample") return CheckMode::Sample;
  if (s == "expand") return CheckMode::Expand;
  throw std::invalid_argument("mode must be sample or expand");
}
inline std::string to_string(CheckMode m) { return m == CheckMode::Sample ? "sample" : "expand"; }

struct SampleOptions {
  std::size_t samples = 40;
  long bound = 10000;
  std::uint64_t seed = 1;
  std::size_t max_skips = 200;
};

/// Random integer points with coordinates in [-bound, bound].
class PointSampler {
 public:
  PointSampler(std::uint64_t seed, long bound) : rng_(seed), dist_(-bound, bound) {}
  std::vector<Rational> next(int n) {
    std::vector<Rational> x(n);
    for (auto& c : x) c = Rational(dist_(rng_));
    return x;
  }
  long integer() { return dist_(rng_); }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> dist_;
};

struct IdentityResult {
  bool holds = false;
  CheckMode mode = CheckMode::Sample;
  Rational scalar = 0;          // lhs = scalar * rhs
  std::size_t samples_used = 0;
  std::size_t skipped = 0;      // samples where both sides vanished
  std::string note;
};

/// lhs = lambda * rhs for one nonzero rational lambda.
inline IdentityResult identity_check(const Expr& lhs, const Expr& rhs, CheckMode mode,
                                     const SampleOptions& opt = {}) {
  if (lhs.nvars() != rhs.nvars()) throw std::invalid_argument("sides live in different rings");
  IdentityResult res;
  res.mode = mode;
  if (mode == CheckMode::Expand) {
    Poly a = lhs.expand(), b = rhs.expand();
    auto l = proportionality(a, b);
    res.holds = l.has_value();
    if (l) res.scalar = *l;
    else res.note = a.is_zero() || b.is_zero() ? "a side expands to zero" : "expansions not proportional";
    return res;
  }
  PointSampler sampler(opt.seed, opt.bound);
  bool have_scalar = false;
  while (res.samples_used < opt.samples) {
    auto x = sampler.next(lhs.nvars());
    Rational a = lhs.eval(x), b = rhs.eval(x);
    if (a == 0 && b == 0) {
      if (++res.skipped > opt.max_skips) throw std::runtime_error("all samples land on common zeros");
      continue;
    }
    ++res.samples_used;
    if (a == 0 || b == 0) {
      res.note = "one side vanishes at a sample where the other does not";
      return res;
    }
    if (!have_scalar) {
      res.scalar = a / b;
      have_scalar = true;
    } else if (a != res.scalar * b) {
      res.note = "scalar ratio differs between samples";
      return res;
    }
  }
  res.holds = true;
  return res;
}

}  // namespace cremona
