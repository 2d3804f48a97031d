#pragma once

// Linear systems of surfaces in P^3 with assigned multiplicities at points and
// along lines, plus the multiplicity operations used to check them.

#include "cremona/config.hpp"
#include "cremona/linalg.hpp"
#include "cremona/picard.hpp"
#include "cremona/poly.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cremona {

struct PointCondition {
  ProjPoint point;
  int mult = 0;
};

struct LineCondition {
  ProjPoint from;
  ProjPoint to;
  int mult = 0;
};

struct Conditions {
  std::vector<PointCondition> points;
  std::vector<LineCondition> lines;
};

struct LinearSystem {
  int degree = 0;
  Conditions conditions;
  std::vector<Poly> basis;
  std::size_t constraint_rows = 0;
  std::size_t primes_used = 0;  // zero when solved by exact elimination over Q

  std::size_t dimension() const { return basis.size(); }
};

/// Point and line conditions of a divisor class on a config; nonpositive
/// multiplicities impose nothing.
inline Conditions conditions_for(const DivisorClass& c, const PointConfig& cfg) {
  Conditions out;
  const Basis& b = c.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::string& g = b.generators()[i];
    if (g == "H") continue;
    Rational m = -c.coeffs()[i];
    if (m.get_den() != 1) throw std::invalid_argument("class is not integral");
    if (m <= 0) continue;
    int mult = static_cast<int>(m.get_num().get_si());
    if (g.size() == 2) out.points.push_back({cfg[g[1] - '0'], mult});
    else out.lines.push_back({cfg[g[1] - '0'], cfg[g[2] - '0'], mult});
  }
  return out;
}

namespace detail {

inline Integer falling(int n, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= n - i;
  return r;
}

/// Rows "every partial of order < m vanishes at p" over the given monomials.
inline void append_vanishing_rows(std::vector<std::vector<Integer>>& rows, const std::vector<Exponents>& monos,
                                  const std::vector<Integer>& p, int m) {
  for (int order = 0; order < m; ++order)
    for (const auto& beta : monomials_of_degree(4, order)) {
      std::vector<Integer> row(monos.size());
      bool nonzero = false;
      for (std::size_t j = 0; j < monos.size(); ++j) {
        const auto& alpha = monos[j];
        Integer v = 1;
        for (int i = 0; i < 4 && v != 0; ++i) {
          if (beta[i] > alpha[i]) {
            v = 0;
            break;
          }
          v *= falling(alpha[i], beta[i]);
          int rest = alpha[i] - beta[i];
          if (rest > 0) {
            Integer pw;
            mpz_pow_ui(pw.get_mpz_t(), p[i].get_mpz_t(), rest);
            v *= pw;
          }
        }
        row[j] = v;
        nonzero = nonzero || v != 0;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
}

}  // namespace detail

/// Integer constraint matrix of degree-d forms (columns: monomials_of_degree(4, d)).
inline ZMatrix condition_matrix(int d, const Conditions& conds) {
  auto monos = monomials_of_degree(4, d);
  std::vector<std::vector<Integer>> rows;
  for (const auto& pc : conds.points) {
    if (pc.mult > d + 1) throw std::invalid_argument("point multiplicity exceeds degree + 1");
    detail::append_vanishing_rows(rows, monos, primitive_integer_vector(pc.point), pc.mult);
  }
  for (const auto& lc : conds.lines) {
    if (same_projective_point(lc.from, lc.to)) throw std::invalid_argument("degenerate line condition");
    auto p = primitive_integer_vector(lc.from), q = primitive_integer_vector(lc.to);
    for (int t = 0; t <= d; ++t) {
      std::vector<Integer> x(4);
      for (int i = 0; i < 4; ++i) x[i] = p[i] + t * q[i];
      detail::append_vanishing_rows(rows, monos, x, lc.mult);
    }
  }
  ZMatrix a(rows.size(), monos.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) a(i, j) = rows[i][j];
  return a;
}

/// Kernel of the constraint matrix. Small systems are eliminated over Q,
/// larger ones by the multimodular route.
inline LinearSystem linear_system(int d, const Conditions& conds) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  LinearSystem ls;
  ls.degree = d;
  ls.conditions = conds;
  auto monos = monomials_of_degree(4, d);
  ZMatrix a = condition_matrix(d, conds);
  ls.constraint_rows = a.rows();
  std::vector<std::vector<Rational>> kernel;
  if (a.rows() == 0) {
    for (std::size_t j = 0; j < monos.size(); ++j) {
      std::vector<Rational> v(monos.size());
      v[j] = 1;
      kernel.push_back(v);
    }
  } else if (monos.size() <= 120) {
    kernel = nullspace(to_q(a));
  } else {
    MultimodularStats st;
    kernel = multimodular_nullspace(a, &st);
    ls.primes_used = st.primes_used;
  }
  for (const auto& v : kernel) {
    auto z = primitive_integer_vector(v);
    std::vector<Rational> c(z.begin(), z.end());
    ls.basis.push_back(from_coefficients(4, monos, c));
  }
  return ls;
}

inline LinearSystem linear_system(const DivisorClass& c, const PointConfig& cfg) {
  Rational d = c.coeff("H");
  if (d.get_den() != 1 || d < 1) throw std::invalid_argument("class degree must be a positive integer");
  return linear_system(static_cast<int>(d.get_num().get_si()), conditions_for(c, cfg));
}

/// Upper bound on the dimension of the system from one prime.
inline std::size_t dimension_bound_mod_p(int d, const Conditions& conds, modp::u64 p = 2147483629ULL) {
  return kernel_dimension_mod_p(condition_matrix(d, conds), p);
}

// ---------------------------------------------------------------------------
// Linear forms and coordinate changes.

/// Linear form vanishing at three non-collinear points, first nonzero coefficient 1.
inline Poly plane_through(const ProjPoint& p, const ProjPoint& q, const ProjPoint& r) {
  auto ker = nullspace(point_matrix({p, q, r}));
  if (ker.size() != 1) throw std::invalid_argument("points are collinear");
  return Poly::linear(normalize_point(ker[0]));
}

inline Poly plane_through(const PointConfig& cfg, int i, int j, int k) { return plane_through(cfg[i], cfg[j], cfg[k]); }

/// Extends the given independent vectors to a basis of Q^4 with coordinate vectors.
inline QMatrix complete_basis(const std::vector<ProjPoint>& first) {
  std::vector<ProjPoint> cols = first;
  for (int e = 0; e < 4 && cols.size() < 4; ++e) {
    ProjPoint v(4);
    v[e] = 1;
    auto trial = cols;
    trial.push_back(v);
    if (rank(point_matrix(trial)) == trial.size()) cols = trial;
  }
  if (cols.size() != 4 || rank(point_matrix(cols)) != 4) throw std::invalid_argument("vectors are dependent");
  return point_matrix(cols).transpose();
}

/// f(M y) for a 4x4 matrix M.
inline Poly change_coordinates(const Poly& f, const QMatrix& m) {
  std::vector<Poly> subs;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Rational> row(4);
    for (std::size_t j = 0; j < 4; ++j) row[j] = m(i, j);
    subs.push_back(Poly::linear(row));
  }
  return f.compose(subs);
}

inline int mult_at_point(const Poly& f, const ProjPoint& p) {
  if (f.is_zero()) throw std::invalid_argument("multiplicity of the zero polynomial");
  Poly g = change_coordinates(f, complete_basis({p}));
  int best = -1;
  for (const auto& [m, c] : g.terms()) {
    auto e = unpack(m);
    int k = e[1] + e[2] + e[3];
    best = best < 0 ? k : std::min(best, k);
  }
  return best;
}

inline int mult_along_line(const Poly& f, const ProjPoint& a, const ProjPoint& b) {
  if (f.is_zero()) throw std::invalid_argument("multiplicity of the zero polynomial");
  if (same_projective_point(a, b)) throw std::invalid_argument("degenerate line");
  Poly g = change_coordinates(f, complete_basis({a, b}));
  int best = -1;
  for (const auto& [m, c] : g.terms()) {
    auto e = unpack(m);
    int k = e[2] + e[3];
    best = best < 0 ? k : std::min(best, k);
  }
  return best;
}

/// Every condition of a class holds with equality on f: the multiplicity at each
/// point and along each line is exactly the coefficient. Returns the mismatches.
inline std::vector<std::string> class_mismatches(const Poly& f, const DivisorClass& c, const PointConfig& cfg) {
  std::vector<std::string> bad;
  if (f.degree() != c.coeff("H")) bad.push_back("degree");
  const Basis& b = c.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    const std::string& g = b.generators()[i];
    if (g == "H") continue;
    long want = std::max<long>(0, -c.coeffs()[i].get_num().get_si());
    long got = g.size() == 2 ? mult_at_point(f, cfg[g[1] - '0']) : mult_along_line(f, cfg[g[1] - '0'], cfg[g[2] - '0']);
    if (got != want) bad.push_back(g + ": want " + std::to_string(want) + " got " + std::to_string(got));
  }
  return bad;
}

}  // namespace cremona
