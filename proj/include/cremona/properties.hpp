#pragma once

// Random instances of the Jacobian lemmas and the Euler relation.

#include "cremona/identity.hpp"
#include "cremona/linalg.hpp"
#include "cremona/poly.hpp"

#include <random>
#include <vector>

namespace cremona {

class PolySampler {
 public:
  explicit PolySampler(std::uint64_t seed, long coeff_bound = 9) : rng_(seed), coeff_(-coeff_bound, coeff_bound) {}

  /// Random homogeneous form of degree d, every monomial present with probability 1/2.
  Poly homogeneous(int nvars, int d) {
    Poly p(nvars);
    while (p.is_zero())
      for (const auto& e : monomials_of_degree(nvars, d))
        if (coin_(rng_)) p.add_term(pack(e), Rational(coeff_(rng_)));
    return p;
  }
  /// Random polynomial of degree at most d.
  Poly dense(int nvars, int d) {
    Poly p(nvars);
    for (int k = 0; k <= d; ++k) p += homogeneous(nvars, k);
    return p;
  }
  std::vector<Rational> point(int nvars, long bound = 1000) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<Rational> x(nvars);
    for (auto& c : x) c = Rational(dist(rng_));
    return x;
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

 private:
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> coeff_;
  std::bernoulli_distribution coin_{0.5};
};

/// g^{m-1} divides det J(h_1..h_n) when g divides h_1..h_m.
inline bool detn_instance(std::uint64_t seed, int nvars = 3) {
  PolySampler ps(seed);
  Poly g = ps.dense(nvars, ps.integer(1, 2));
  while (g.degree() < 1) g = ps.dense(nvars, 2);
  int m = ps.integer(2, nvars);
  std::vector<Poly> h;
  for (int i = 0; i < nvars; ++i) h.push_back(i < m ? g * ps.dense(nvars, ps.integer(1, 2)) : ps.dense(nvars, 2));
  Poly j = jacobian_det(h);
  if (j.is_zero()) return true;
  return j.divide_exact(g.pow(m - 1)).has_value();
}

/// det [h; dh/dx1; dh/dx2; dh/dx3] = (x0 / d) det J(h) at a random point.
inline bool fakejac_instance(std::uint64_t seed) {
  PolySampler ps(seed);
  int d = ps.integer(1, 4);
  std::vector<Poly> h;
  for (int i = 0; i < 4; ++i) h.push_back(ps.homogeneous(4, d));
  auto x = ps.point(4);
  QMatrix bordered(4, 4);
  for (int i = 0; i < 4; ++i) {
    bordered(0, i) = h[i].eval(x);
    for (int k = 1; k < 4; ++k) bordered(k, i) = h[i].derivative(k).eval(x);
  }
  Rational lhs = det(bordered);
  Rational rhs = x[0] / d * jacobian_det_at(jacobian_partials(h), x);
  return lhs == rhs;
}

/// Both displayed identities for the Jacobians of the quotient maps, at a random point.
inline bool imagesjac_instance(std::uint64_t seed) {
  PolySampler ps(seed);
  int d = ps.integer(1, 4);
  std::vector<Poly> h;
  for (int i = 0; i < 4; ++i) h.push_back(ps.homogeneous(4, d));
  std::vector<Rational> x;
  std::vector<Rational> hv;
  do {
    x = ps.point(4);
    hv.clear();
    for (const auto& p : h) hv.push_back(p.eval(x));
  } while (hv[0] == 0 || hv[1] == 0 || hv[2] == 0);
  Rational j = jacobian_det_at(jacobian_partials(h), x);
  auto ratio_jac = [&](const std::vector<std::pair<int, int>>& pairs) {
    QMatrix m(3, 3);
    for (int k = 0; k < 3; ++k) {
      const Poly &n = h[pairs[k].first], &dn = h[pairs[k].second];
      Rational nv = n.eval(x), dv = dn.eval(x);
      for (int v = 1; v < 4; ++v)
        m(k, v - 1) = (dv * n.derivative(v).eval(x) - nv * dn.derivative(v).eval(x)) / (dv * dv);
    }
    return det(m);
  };
  Rational first = ratio_jac({{0, 1}, {2, 0}, {3, 0}});
  Rational second = ratio_jac({{1, 0}, {2, 0}, {3, 2}});
  bool ok1 = first == -x[0] / ((hv[0] * hv[1]) * (hv[0] * hv[1]) * d) * j;
  bool ok2 = second == x[0] / (hv[0] * hv[0] * hv[0] * hv[2] * d) * j;
  return ok1 && ok2;
}

/// sum x_i dh/dx_i = d h, exactly.
inline bool euler_instance(std::uint64_t seed) {
  PolySampler ps(seed);
  int n = ps.integer(2, 4), d = ps.integer(1, 6);
  Poly h = ps.homogeneous(n, d);
  Poly sum(n);
  for (int i = 0; i < n; ++i) sum += var(i, n) * h.derivative(i);
  return sum == h * Rational(d);
}

}  // namespace cremona
