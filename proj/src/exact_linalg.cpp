#include "localconj/exact_linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "localconj/number_theory.hpp"

namespace localconj {

Integer det(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det: matrix is not square");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.swap_rows(k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Row-reduces a copy of m over Z/pZ; returns (rank, determinant-if-square).
std::pair<std::size_t, Integer> eliminate_mod(const IntMatrix& m, const Integer& p) {
  IntMatrix a = mod_floor(m, p);
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t rank = 0;
  Integer d = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) {
      d = 0;
      continue;
    }
    if (piv != rank) {
      a.swap_rows(piv, rank);
      d = -d;
    }
    d = mod_floor(d * a(rank, c), p);
    Integer inv;
    mpz_invert(inv.get_mpz_t(), a(rank, c).get_mpz_t(), p.get_mpz_t());
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      Integer f = mod_floor(a(i, c) * inv, p);
      for (std::size_t j = c; j < cols; ++j) a(i, j) = mod_floor(a(i, j) - f * a(rank, j), p);
    }
    ++rank;
  }
  if (rank < rows || rank < cols) d = 0;
  return {rank, mod_floor(d, p)};
}

// Working state for SNF: original = s * w * t and s_inv * original * t_inv = w.
class SnfWorker {
 public:
  explicit SnfWorker(const IntMatrix& m)
      : w_(m),
        s_(IntMatrix::identity(m.rows())),
        s_inv_(IntMatrix::identity(m.rows())),
        t_(IntMatrix::identity(m.cols())),
        t_inv_(IntMatrix::identity(m.cols())) {}

  SNFDecomposition run(const IntMatrix& original) {
    const std::size_t lim = std::min(w_.rows(), w_.cols());
    std::size_t rank = 0;
    for (std::size_t k = 0; k < lim; ++k) {
      if (!move_min_to(k, k, w_.rows(), w_.cols())) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = k + 1; i < w_.rows(); ++i) {
          if (w_(i, k) == 0) continue;
          Integer q;
          mpz_tdiv_q(q.get_mpz_t(), w_(i, k).get_mpz_t(), w_(k, k).get_mpz_t());
          row_add(i, k, -q);
          if (w_(i, k) != 0) clean = false;
        }
        for (std::size_t j = k + 1; j < w_.cols(); ++j) {
          if (w_(k, j) == 0) continue;
          Integer q;
          mpz_tdiv_q(q.get_mpz_t(), w_(k, j).get_mpz_t(), w_(k, k).get_mpz_t());
          col_add(j, k, -q);
          if (w_(k, j) != 0) clean = false;
        }
        if (!clean) {
          move_min_in_cross(k);
          continue;
        }
        // Divisibility chain: pull a non-multiple of the pivot into row k.
        std::size_t bad = 0;
        for (std::size_t i = k + 1; i < w_.rows() && !bad; ++i)
          for (std::size_t j = k + 1; j < w_.cols(); ++j)
            if (mpz_divisible_p(w_(i, j).get_mpz_t(), w_(k, k).get_mpz_t()) == 0) {
              bad = i;
              break;
            }
        if (!bad) break;
        row_add(k, bad, 1);
      }
      if (w_(k, k) < 0) row_negate(k);
      ++rank;
    }
    SNFDecomposition out;
    out.s = std::move(s_);
    out.d = std::move(w_);
    out.t = std::move(t_);
    out.original = original;
    out.s_inv = std::move(s_inv_);
    out.t_inv = std::move(t_inv_);
    out.rank = rank;
    return out;
  }

 private:
  // row_i += c row_j on w; s absorbs the inverse operation on its columns.
  void row_add(std::size_t i, std::size_t j, const Integer& c) {
    w_.add_row_multiple(i, j, c);
    s_.add_col_multiple(j, i, -c);
    s_inv_.add_row_multiple(i, j, c);
  }
  void row_swap(std::size_t i, std::size_t j) {
    w_.swap_rows(i, j);
    s_.swap_cols(i, j);
    s_inv_.swap_rows(i, j);
  }
  void row_negate(std::size_t i) {
    w_.negate_row(i);
    s_.negate_col(i);
    s_inv_.negate_row(i);
  }
  // col_i += c col_j on w; t absorbs the inverse operation on its rows.
  void col_add(std::size_t i, std::size_t j, const Integer& c) {
    w_.add_col_multiple(i, j, c);
    t_.add_row_multiple(j, i, -c);
    t_inv_.add_col_multiple(i, j, c);
  }
  void col_swap(std::size_t i, std::size_t j) {
    w_.swap_cols(i, j);
    t_.swap_rows(i, j);
    t_inv_.swap_cols(i, j);
  }

  bool move_min_to(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
    std::size_t bi = rows, bj = cols;
    for (std::size_t i = r0; i < rows; ++i)
      for (std::size_t j = c0; j < cols; ++j) {
        if (w_(i, j) == 0) continue;
        if (bi == rows || mpz_cmpabs(w_(i, j).get_mpz_t(), w_(bi, bj).get_mpz_t()) < 0) {
          bi = i;
          bj = j;
        }
      }
    if (bi == rows) return false;
    row_swap(r0, bi);
    col_swap(c0, bj);
    return true;
  }

  void move_min_in_cross(std::size_t k) {
    std::size_t bi = k, bj = k;
    for (std::size_t i = k + 1; i < w_.rows(); ++i)
      if (w_(i, k) != 0 && mpz_cmpabs(w_(i, k).get_mpz_t(), w_(bi, bj).get_mpz_t()) < 0) {
        bi = i;
        bj = k;
      }
    for (std::size_t j = k + 1; j < w_.cols(); ++j)
      if (w_(k, j) != 0 && mpz_cmpabs(w_(k, j).get_mpz_t(), w_(bi, bj).get_mpz_t()) < 0) {
        bi = k;
        bj = j;
      }
    row_swap(k, bi);
    col_swap(k, bj);
  }

  IntMatrix w_, s_, s_inv_, t_, t_inv_;
};

}  // namespace

Integer det_mod(const IntMatrix& m, const Integer& p) {
  if (!m.is_square()) throw std::invalid_argument("det_mod: matrix is not square");
  return eliminate_mod(m, p).second;
}

std::size_t rank_mod(const IntMatrix& m, const Integer& p) { return eliminate_mod(m, p).first; }

Integer gcd_of_entries(const IntMatrix& m) {
  Integer g = 0;
  for (const auto& v : m.data()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

SNFDecomposition snf(const IntMatrix& m) {
  if (m.empty()) throw std::invalid_argument("snf: empty matrix");
  SNFDecomposition out = SnfWorker(m).run(m);
  check_snf(out);
  return out;
}

void check_snf(const SNFDecomposition& dec) {
  const IntMatrix& d = dec.d;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) throw std::logic_error("snf: d is not diagonal");
  const std::size_t len = dec.diagonal_length();
  for (std::size_t i = 0; i < len; ++i) {
    if (d(i, i) < 0) throw std::logic_error("snf: negative invariant factor");
    if (i + 1 < len && d(i + 1, i + 1) != 0 &&
        mpz_divisible_p(d(i + 1, i + 1).get_mpz_t(), d(i, i).get_mpz_t()) == 0)
      throw std::logic_error("snf: divisibility chain broken");
    if (i + 1 < len && d(i, i) == 0 && d(i + 1, i + 1) != 0)
      throw std::logic_error("snf: zero invariant factor before nonzero one");
  }
  if (!(dec.s * d * dec.t == dec.original)) throw std::logic_error("snf: s*d*t != original");
  const std::size_t m = dec.s.rows(), n = dec.t.rows();
  if (!(dec.s * dec.s_inv == IntMatrix::identity(m))) throw std::logic_error("snf: s_inv wrong");
  if (!(dec.t * dec.t_inv == IntMatrix::identity(n))) throw std::logic_error("snf: t_inv wrong");
}

PPartProfile p_part(const SNFDecomposition& decomp, const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument("p_part: modulus is not prime");
  PPartProfile prof;
  prof.prime = p;
  for (std::size_t i = 0; i < decomp.diagonal_length(); ++i)
    if (decomp.diagonal(i) != 0) prof.exponents.push_back(valuation(decomp.diagonal(i), p));
  std::sort(prof.exponents.begin(), prof.exponents.end());
  prof.mu = prof.exponents.empty() ? 0 : prof.exponents.back();
  return prof;
}

std::vector<IntVector> kernel_basis_Z(const SNFDecomposition& decomp) {
  std::vector<IntVector> basis;
  for (std::size_t j = decomp.rank; j < decomp.t_inv.cols(); ++j) basis.push_back(decomp.t_inv.col(j));
  return basis;
}

std::vector<IntVector> kernel_basis_Z(const IntMatrix& m) { return kernel_basis_Z(snf(m)); }

std::vector<IntVector> kernel_mod(const SNFDecomposition& decomp, const Integer& modulus) {
  if (!prime_power_parts(modulus)) throw std::invalid_argument("kernel_mod: modulus is not a prime power");
  // m x == 0 iff d (t x) == 0 since s is invertible; solve coordinatewise in y = t x.
  std::vector<IntVector> gens;
  for (std::size_t j = 0; j < decomp.t_inv.cols(); ++j) {
    Integer scale = 1;
    if (j < decomp.rank) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), decomp.diagonal(j).get_mpz_t(), modulus.get_mpz_t());
      scale = modulus / g;
    }
    if (mpz_divisible_p(scale.get_mpz_t(), modulus.get_mpz_t())) continue;
    IntVector g = decomp.t_inv.col(j);
    for (auto& v : g) v = mod_floor(v * scale, modulus);
    gens.push_back(std::move(g));
  }
  return gens;
}

std::vector<IntVector> kernel_mod(const IntMatrix& m, const Integer& modulus) {
  return kernel_mod(snf(m), modulus);
}

namespace {

void reduce_above_pivots(std::vector<IntVector>& basis) {
  const std::size_t n = basis.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (basis[j].empty()) continue;
    const Integer& piv = basis[j][j];
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].empty() || basis[i][j] == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), basis[i][j].get_mpz_t(), piv.get_mpz_t());
      if (q == 0) continue;
      for (std::size_t k = j; k < n; ++k) basis[i][k] -= q * basis[j][k];
    }
  }
}

}  // namespace

IntMatrix hermite_normal_form(const IntMatrix& m) {
  const std::size_t n = m.cols();
  std::vector<IntVector> basis(n);  // basis[j]: row with pivot in column j, or empty
  for (std::size_t r = 0; r < m.rows(); ++r) {
    IntVector v = m.row(r);
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      if (basis[j].empty()) {
        if (v[j] < 0)
          for (auto& x : v) x = -x;
        basis[j] = std::move(v);
        break;
      }
      IntVector& b = basis[j];
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t(), v[j].get_mpz_t());
      const Integer bg = b[j] / g, vg = v[j] / g;
      for (std::size_t k = j; k < n; ++k) {
        Integer nb = s * b[k] + t * v[k];
        v[k] = bg * v[k] - vg * b[k];
        b[k] = std::move(nb);
      }
      if (b[j] < 0)
        for (auto& x : b) x = -x;
    }
    reduce_above_pivots(basis);
  }
  std::vector<IntVector> rows;
  for (auto& b : basis)
    if (!b.empty()) rows.push_back(std::move(b));
  if (rows.empty()) return IntMatrix(1, n);
  return IntMatrix::from_rows(rows);
}

Adjugate adjugate(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("adjugate: matrix is not square");
  const std::size_t n = m.rows();
  Integer d = det(m);
  if (d == 0) throw std::invalid_argument("adjugate: singular matrix");
  // Gauss-Jordan over Q on [m | I].
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[piv], a[c]);
    const Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  Adjugate out{IntMatrix(n, n), d};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational v = a[i][n + j] * d;
      v.canonicalize();
      if (v.get_den() != 1) throw std::logic_error("adjugate: non-integral entry");
      out.adj(i, j) = v.get_num();
    }
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  Adjugate a = adjugate(m);
  if (a.det != 1 && a.det != -1) throw std::invalid_argument("unimodular_inverse: |det| != 1");
  return a.det * a.adj;
}

}  // namespace localconj
