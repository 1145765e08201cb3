#pragma once

// Independent reference computations. Nothing here calls the elimination,
// Smith/Hermite, kernel or conjugacy code of the library; only the plain
// containers (Integer, IntMatrix, IntPoly) are shared.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "localconj/int_matrix.hpp"
#include "localconj/poly.hpp"

namespace oracle {

using localconj::IntMatrix;
using localconj::IntPoly;
using localconj::IntVector;
using localconj::Integer;
using localconj::Rational;

// Laplace expansion along the first row.
inline Integer laplace_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    const Integer term = m(0, c) * laplace_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

// Rank over Q by naive Gaussian elimination on rationals.
inline std::size_t rational_rank(const IntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// D_k: gcd of all k x k minors (0 if all vanish).
inline Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  Integer g = 0;
  for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
      IntMatrix sub(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
      const Integer d = laplace_det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    });
  });
  return g;
}

// Invariant factors d_k = D_k / D_{k-1} for k up to the rank.
inline std::vector<Integer> invariant_factors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  const std::size_t lim = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= lim; ++k) {
    const Integer d = determinantal_divisor(m, k);
    if (d == 0) break;
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

inline unsigned vp(Integer n, const Integer& p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// mu from determinantal divisors of the operator X -> A X - X B (column-major vec).
inline unsigned mu(const IntMatrix& a, const IntMatrix& b, const Integer& p) {
  const std::size_t n = a.rows();
  IntMatrix l(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      // column of vec index i + j n: image of E_ij is A E_ij - E_ij B.
      for (std::size_t r = 0; r < n; ++r) {
        l(r + j * n, i + j * n) += a(r, i);
        l(i + r * n, i + j * n) -= b(j, r);
      }
    }
  unsigned best = 0;
  for (const auto& d : invariant_factors(l)) best = std::max(best, vp(d, p));
  return best;
}

inline std::int64_t md(std::int64_t a, std::int64_t q) { return ((a % q) + q) % q; }

// Exists X mod q with A X == X B and det X a unit mod p, by enumeration (n = 2).
inline bool brute_similar_mod(const IntMatrix& a, const IntMatrix& b, std::int64_t p, std::int64_t q) {
  std::int64_t A[2][2], B[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      A[i][j] = md(localconj::mod_floor(a(i, j), q).get_si(), q);
      B[i][j] = md(localconj::mod_floor(b(i, j), q).get_si(), q);
    }
  std::int64_t x[4];
  for (x[0] = 0; x[0] < q; ++x[0])
    for (x[1] = 0; x[1] < q; ++x[1])
      for (x[2] = 0; x[2] < q; ++x[2])
        for (x[3] = 0; x[3] < q; ++x[3]) {
          const std::int64_t X[2][2] = {{x[0], x[1]}, {x[2], x[3]}};
          if (md(X[0][0] * X[1][1] - X[0][1] * X[1][0], p) == 0) continue;
          bool ok = true;
          for (int i = 0; i < 2 && ok; ++i)
            for (int j = 0; j < 2 && ok; ++j) {
              const std::int64_t lhs = A[i][0] * X[0][j] + A[i][1] * X[1][j];
              const std::int64_t rhs = X[i][0] * B[0][j] + X[i][1] * B[1][j];
              ok = md(lhs - rhs, q) == 0;
            }
          if (ok) return true;
        }
  return false;
}

// All x in (Z/q)^k with m x == 0 mod q.
inline std::vector<IntVector> brute_kernel_mod(const IntMatrix& m, std::int64_t q) {
  const std::size_t k = m.cols();
  std::vector<IntVector> out;
  std::vector<std::int64_t> x(k, 0);
  for (;;) {
    bool zero = true;
    for (std::size_t i = 0; i < m.rows() && zero; ++i) {
      std::int64_t s = 0;
      for (std::size_t j = 0; j < k; ++j) s = md(s + md(m(i, j).get_si(), q) * x[j], q);
      zero = s == 0;
    }
    if (zero) {
      IntVector v(k);
      for (std::size_t j = 0; j < k; ++j) v[j] = static_cast<long>(x[j]);
      out.push_back(v);
    }
    std::size_t j = 0;
    while (j < k && ++x[j] == q) x[j++] = 0;
    if (j == k) break;
  }
  return out;
}

// Resultant as the determinant of the Sylvester matrix.
inline Integer sylvester_resultant(const IntPoly& f, const IntPoly& g) {
  const int m = f.degree(), n = g.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  IntMatrix s(size, size);
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s(r, r + i) = f[static_cast<std::size_t>(m - i)];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s(n + r, r + i) = g[static_cast<std::size_t>(n - i)];
  return laplace_det(s);
}

// Schoolbook division by a monic divisor; true iff it divides exactly.
inline bool divides_monic(const IntPoly& g, const IntPoly& f) {
  std::vector<Integer> r = f.coefficients();
  const int dg = g.degree();
  for (int i = f.degree(); i >= dg; --i) {
    const Integer c = r[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j) r[static_cast<std::size_t>(i - dg + j)] -= c * g[static_cast<std::size_t>(j)];
  }
  for (const auto& c : r)
    if (c != 0) return false;
  return true;
}

// Monic f of degree <= 4: irreducible iff no monic factor of degree 1..deg/2.
// Roots have |z| < 1 + max|c_i|, so a degree-d factor has |g_k| <= C(d,k) B^(d-k).
inline bool exhaustive_irreducible(const IntPoly& f) {
  const int n = f.degree();
  Integer bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, Integer(abs(f[static_cast<std::size_t>(i)])));
  bound += 1;
  for (int d = 1; d <= n / 2; ++d) {
    std::vector<Integer> lim(static_cast<std::size_t>(d));
    for (int k = d - 1; k >= 0; --k) {
      // coefficient of t^k in a degree-d monic factor
      Integer c = 1;
      for (int i = 0; i < d - k; ++i) c = c * (d - i) / (i + 1);
      Integer b = 1;
      for (int i = 0; i < d - k; ++i) b *= bound;
      lim[static_cast<std::size_t>(k)] = c * b;
    }
    std::vector<Integer> g(static_cast<std::size_t>(d) + 1);
    g[static_cast<std::size_t>(d)] = 1;
    for (int k = 0; k < d; ++k) g[static_cast<std::size_t>(k)] = -lim[static_cast<std::size_t>(k)];
    for (;;) {
      if (divides_monic(IntPoly(g), f)) return false;
      int k = 0;
      while (k < d) {
        auto& c = g[static_cast<std::size_t>(k)];
        if (c < lim[static_cast<std::size_t>(k)]) {
          ++c;
          break;
        }
        c = -lim[static_cast<std::size_t>(k)];
        ++k;
      }
      if (k == d) break;
    }
  }
  return true;
}

// Largest k with off-scalar part of a 2x2 matrix zero mod p^k, by trying every lambda.
inline unsigned brute_ell(const IntMatrix& a, std::int64_t p, unsigned cap = 12) {
  unsigned best = 0;
  std::int64_t q = p;
  for (unsigned k = 1; k <= cap; ++k, q *= p) {
    bool found = false;
    for (std::int64_t lam = 0; lam < q && !found; ++lam) {
      found = md(localconj::mod_floor(a(0, 0) - lam, q).get_si(), q) == 0 &&
              md(localconj::mod_floor(a(1, 1) - lam, q).get_si(), q) == 0 &&
              localconj::mod_floor(a(0, 1), q) == 0 && localconj::mod_floor(a(1, 0), q) == 0;
    }
    if (!found) break;
    best = k;
  }
  return best;
}

// y with y H = c over Q for square nonsingular H, by Cramer's rule.
inline std::vector<Rational> cramer_row_solve(const IntMatrix& h, const std::vector<Rational>& c) {
  const std::size_t n = h.rows();
  // Scale c to integers.
  Integer den = 1;
  for (const auto& x : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  const IntMatrix ht = h.transpose();
  const Integer d = laplace_det(ht);
  std::vector<Rational> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix mi = ht;
    for (std::size_t r = 0; r < n; ++r) mi(r, i) = Integer(c[r] * den);
    y[i] = Rational(laplace_det(mi), d * den);
    y[i].canonicalize();
  }
  return y;
}

// Is the rational row vector v in the Z-rowspan of the n x n nonsingular matrix h?
inline bool in_rowspan(const IntMatrix& h, const std::vector<Rational>& v) {
  for (const auto& y : cramer_row_solve(h, v))
    if (y.get_den() != 1) return false;
  return true;
}

// Small random integer matrix with entries in [-bound, bound].
inline IntMatrix random_matrix(std::size_t r, std::size_t c, long bound, std::mt19937_64& rng) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  return m;
}

inline IntPoly random_monic(int degree, long bound, std::mt19937_64& rng) {
  std::vector<Integer> c(static_cast<std::size_t>(degree) + 1);
  for (int i = 0; i < degree; ++i)
    c[static_cast<std::size_t>(i)] = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  c.back() = 1;
  return IntPoly(c);
}

}  // namespace oracle
