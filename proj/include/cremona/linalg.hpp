#pragma once

// Dense exact linear algebra: rational RREF/nullspace/inverse, integer Hermite
// normal form, and a multimodular kernel for large sparse-ish systems.

#include "cremona/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cremona {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void set_col(std::size_t c, const std::vector<T>& v) {
    if (v.size() != rows_) throw std::invalid_argument("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }
  void append_row(const std::vector<T>& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          if (o(k, j) != 0) out(i, j) += a * o(k, j);
      }
    return out;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k)
        if ((*this)(i, k) != 0 && v[k] != 0) out[i] += (*this)(i, k) * v[k];
    return out;
  }

  Matrix operator+(const Matrix& o) const {
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
  }
  Matrix operator-(const Matrix& o) const {
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
    return out;
  }
  Matrix scaled(const T& s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x *= s;
    return out;
  }
  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }
  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Integer>;

inline QMatrix to_q(const ZMatrix& m) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

/// Result of row reduction: pivot column per pivot row.
struct RrefInfo {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// In-place reduced row echelon form over Q.
inline RrefInfo rref(QMatrix& m) {
  RrefInfo info;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    info.pivots.push_back(c);
    ++r;
  }
  info.rank = r;
  return info;
}

inline std::size_t rank(QMatrix m) { return rref(m).rank; }

/// Kernel basis; each vector has a 1 in its own free column and 0 in the others.
inline std::vector<std::vector<Rational>> nullspace(QMatrix m) {
  RrefInfo info = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : info.pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < info.rank; ++i) v[info.pivots[i]] = -m(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Rational det(QMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  Rational d = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

inline std::optional<QMatrix> inverse(const QMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  RrefInfo info = rref(aug);
  if (info.rank < n || info.pivots[n - 1] != n - 1) return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class T>
Matrix<T> matrix_power(const Matrix<T>& m, unsigned long e) {
  Matrix<T> result = Matrix<T>::identity(m.rows());
  Matrix<T> base = m;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

/// Characteristic polynomial det(tI - M), coefficients from t^0 up to t^n.
inline std::vector<Rational> charpoly(const QMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix mk(n, n);  // M_k of Faddeev-LeVerrier
  QMatrix id = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + id.scaled(c[n - k + 1]);
    QMatrix am = m * mk;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

// ---------------------------------------------------------------------------
// Hermite normal form over Z (row style, upper triangular, positive pivots).

struct HermiteForm {
  ZMatrix rows;                      // nonzero HNF rows
  std::vector<std::size_t> pivots;   // pivot column of each row
};

inline HermiteForm hermite_normal_form(ZMatrix m) {
  HermiteForm h;
  std::size_t r = 0;
  const std::size_t nr = m.rows(), nc = m.cols();
  auto row_op = [&](std::size_t i, std::size_t j, const Integer& a, const Integer& b,
                    const Integer& c, const Integer& d) {
    // (row_i, row_j) <- (a*row_i + b*row_j, c*row_i + d*row_j)
    for (std::size_t k = 0; k < nc; ++k) {
      Integer x = m(i, k), y = m(j, k);
      m(i, k) = a * x + b * y;
      m(j, k) = c * x + d * y;
    }
  };
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    for (std::size_t i = r + 1; i < nr; ++i) {
      if (m(i, c) == 0) continue;
      if (m(r, c) == 0) {
        for (std::size_t k = 0; k < nc; ++k) std::swap(m(r, k), m(i, k));
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m(r, c).get_mpz_t(), m(i, c).get_mpz_t());
      Integer u = m(r, c) / g, v = m(i, c) / g;
      row_op(r, i, s, t, -v, u);
    }
    if (m(r, c) == 0) continue;
    if (m(r, c) < 0)
      for (std::size_t k = 0; k < nc; ++k) m(r, k) = -m(r, k);
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
      if (q != 0)
        for (std::size_t k = 0; k < nc; ++k) m(i, k) -= q * m(r, k);
    }
    h.pivots.push_back(c);
    ++r;
  }
  h.rows = ZMatrix(r, nc);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < nc; ++k) h.rows(i, k) = m(i, k);
  return h;
}

/// True iff v lies in the Z-row-span encoded by the HNF.
inline bool hnf_contains(const HermiteForm& h, std::vector<Integer> v) {
  if (v.size() != h.rows.cols()) throw std::invalid_argument("vector length mismatch");
  std::size_t next = 0;
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] == 0) continue;
    while (next < h.pivots.size() && h.pivots[next] < c) ++next;
    if (next == h.pivots.size() || h.pivots[next] != c) return false;
    if (!mpz_divisible_p(v[c].get_mpz_t(), h.rows(next, c).get_mpz_t())) return false;
    Integer q = v[c] / h.rows(next, c);
    for (std::size_t k = c; k < v.size(); ++k) v[k] -= q * h.rows(next, k);
  }
  return true;
}

/// Absolute determinant of the lattice spanned by full-rank HNF rows.
inline Integer hnf_index(const HermiteForm& h) {
  Integer d = 1;
  for (std::size_t i = 0; i < h.pivots.size(); ++i) d *= h.rows(i, h.pivots[i]);
  return d;
}

// ---------------------------------------------------------------------------
// Arithmetic modulo word-size primes.

namespace modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128)a * b % p); }

inline u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return powmod(a, p - 2, p);
}

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

/// Primes just below 2^31, in decreasing order; the k-th call returns the k-th prime.
inline std::vector<u64> primes_below_2_31(std::size_t count, std::size_t skip = 0) {
  std::vector<u64> out;
  u64 n = (1ull << 31) - 1;
  std::size_t seen = 0;
  while (out.size() < count) {
    if (is_prime(n)) {
      if (seen >= skip) out.push_back(n);
      ++seen;
    }
    n -= 2;
  }
  return out;
}

/// Reduces q mod p; nullopt when p divides the denominator.
inline std::optional<u64> reduce(const Rational& q, u64 p) {
  u64 den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) return std::nullopt;
  u64 num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  return mulmod(num, invmod(den, p), p);
}

inline u64 reduce(const Integer& z, u64 p) { return mpz_fdiv_ui(z.get_mpz_t(), p); }

/// Row-major dense matrix mod p with row reduction.
struct ModMatrix {
  std::size_t rows = 0, cols = 0;
  u64 p = 0;
  std::vector<u64> a;
  u64& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  u64 at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

/// Reduced row echelon form in place. The returned pivot rows record, for each
/// pivot, the index of the original row that supplied it.
struct ModRref {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> source_rows;
};

inline ModRref rref(ModMatrix& m) {
  ModRref info;
  std::vector<std::size_t> origin(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) origin[i] = i;
  const u64 p = m.p;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
      std::swap(origin[piv], origin[r]);
    }
    u64 inv = invmod(m.at(r, c), p);
    u64* prow = &m.a[r * m.cols];
    for (std::size_t j = c; j < m.cols; ++j) prow[j] = (prow[j] * inv) % p;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      u64 f = m.at(i, c);
      if (f == 0) continue;
      u64 nf = p - f;
      u64* irow = &m.a[i * m.cols];
      for (std::size_t j = c; j < m.cols; ++j)
        if (prow[j]) irow[j] = (irow[j] + nf * prow[j]) % p;
    }
    info.pivots.push_back(c);
    info.source_rows.push_back(origin[r]);
    ++r;
  }
  return info;
}

}  // namespace modp

/// Rational reconstruction of a mod m; nullopt when no small fraction exists.
inline std::optional<Rational> rational_reconstruct(const Integer& a, const Integer& m) {
  // Wang's bound: |num|, den <= sqrt(m/2).
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = r1; r1 = r2; t0 = t1; t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

/// Integer matrix rows, each a rational row scaled by its denominator lcm.
inline ZMatrix integer_rows(const QMatrix& m) {
  ZMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return out;
}

inline modp::ModMatrix reduce_rows(const ZMatrix& a, const std::vector<std::size_t>& rows, modp::u64 p) {
  modp::ModMatrix m;
  m.rows = rows.size();
  m.cols = a.cols();
  m.p = p;
  m.a.resize(m.rows * m.cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = modp::reduce(a(rows[i], j), p);
  return m;
}

/// Dimension of the kernel of an integer matrix modulo p. This is an upper
/// bound for the rational kernel dimension.
inline std::size_t kernel_dimension_mod_p(const ZMatrix& a, modp::u64 p) {
  std::vector<std::size_t> all(a.rows());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto m = reduce_rows(a, all, p);
  return a.cols() - modp::rref(m).pivots.size();
}

struct MultimodularStats {
  std::size_t primes_used = 0;
  std::size_t selected_rows = 0;
};

/// Rational kernel of an integer matrix by elimination modulo several primes,
/// CRT, rational reconstruction, and exact verification on every row.
/// Basis is normalized the same way as nullspace(): unit vectors on free columns.
inline std::vector<std::vector<Rational>> multimodular_nullspace(const ZMatrix& a,
                                                                 MultimodularStats* stats = nullptr,
                                                                 std::size_t max_primes = 400) {
  const std::size_t n = a.cols();
  std::vector<std::size_t> all(a.rows());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto primes = modp::primes_below_2_31(max_primes);
  std::size_t prime_idx = 0;

  // Pick independent rows with the first prime; later primes work on those rows only.
  std::vector<std::size_t> selected;
  std::vector<std::size_t> pivots;
  {
    auto m = reduce_rows(a, all, primes[prime_idx]);
    auto info = modp::rref(m);
    selected = info.source_rows;
    std::sort(selected.begin(), selected.end());
    pivots = info.pivots;
  }
  if (stats) stats->selected_rows = selected.size();

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  const std::size_t k = free_cols.size();
  if (k == 0) return {};

  // Accumulated residues for the pivot entries: residue[f][pivot_index].
  std::vector<std::vector<Integer>> residue(k, std::vector<Integer>(pivots.size()));
  Integer modulus = 1;
  std::vector<std::vector<Rational>> previous;

  auto verify = [&](const std::vector<std::vector<Rational>>& basis) {
    for (const auto& v : basis) {
      Integer l = lcm_of_denominators(v);
      std::vector<Integer> w(n);
      for (std::size_t j = 0; j < n; ++j) w[j] = v[j].get_num() * (l / v[j].get_den());
      for (std::size_t i = 0; i < a.rows(); ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < n; ++j)
          if (w[j] != 0 && a(i, j) != 0) s += a(i, j) * w[j];
        if (s != 0) return false;
      }
    }
    return true;
  };

  for (; prime_idx < primes.size(); ++prime_idx) {
    const modp::u64 p = primes[prime_idx];
    auto m = reduce_rows(a, selected, p);
    auto info = modp::rref(m);
    if (info.pivots != pivots) continue;  // unlucky prime for this pivot pattern
    if (stats) ++stats->primes_used;
    Integer pz(static_cast<unsigned long>(p));
    const modp::u64 mod_inv = modp::invmod(modp::reduce(modulus, p), p);
    for (std::size_t f = 0; f < k; ++f) {
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        modp::u64 val = m.at(i, free_cols[f]);
        val = val ? p - val : 0;  // kernel entry is minus the RREF entry
        // CRT: x = old + modulus * ((val - old) * modulus^{-1} mod p)
        modp::u64 old_mod = modp::reduce(residue[f][i], p);
        modp::u64 delta = modp::mulmod((val + p - old_mod) % p, mod_inv, p);
        residue[f][i] += modulus * Integer(static_cast<unsigned long>(delta));
      }
    }
    modulus *= pz;

    // Attempt reconstruction every few primes.
    std::vector<std::vector<Rational>> basis(k, std::vector<Rational>(n));
    bool ok = true;
    for (std::size_t f = 0; f < k && ok; ++f) {
      basis[f][free_cols[f]] = 1;
      for (std::size_t i = 0; i < pivots.size() && ok; ++i) {
        auto q = rational_reconstruct(residue[f][i], modulus);
        if (!q) ok = false;
        else basis[f][pivots[i]] = *q;
      }
    }
    if (!ok) continue;
    if (basis == previous && verify(basis)) return basis;
    previous = std::move(basis);
  }
  throw std::runtime_error("multimodular nullspace did not stabilize");
}

}  // namespace cremona
