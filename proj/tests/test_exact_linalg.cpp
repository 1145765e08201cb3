#include <doctest.h>

#include <algorithm>
#include <set>

#include "localconj/exact_linalg.hpp"
#include "localconj/number_theory.hpp"
#include "oracles.hpp"

using namespace localconj;

namespace {

std::vector<Rational> as_rational(const IntVector& v) { return std::vector<Rational>(v.begin(), v.end()); }

// Same Z-rowspan, for full-column-rank square-ish bases.
bool same_rowspan(const IntMatrix& a, const IntMatrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!oracle::in_rowspan(b, as_rational(a.row(i)))) return false;
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (!oracle::in_rowspan(a, as_rational(b.row(i)))) return false;
  return true;
}

}  // namespace

TEST_CASE("det agrees with Laplace expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const IntMatrix m = oracle::random_matrix(n, n, 6, rng);
    CHECK(det(m) == oracle::laplace_det(m));
  }
  CHECK(det(IntMatrix{{0, 0}, {0, 0}}) == 0);
  CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK_THROWS_AS(det(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("det_mod and rank_mod") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const IntMatrix m = oracle::random_matrix(n, n, 9, rng);
    for (long p : {2L, 3L, 5L, 7L}) {
      CHECK(det_mod(m, p) == mod_floor(oracle::laplace_det(m), p));
      CHECK((rank_mod(m, p) == n) == (det_mod(m, p) != 0));
    }
  }
  CHECK(rank_mod(IntMatrix{{2, 4}, {6, 8}}, 2) == 0);
  CHECK(rank_mod(IntMatrix{{1, 2}, {2, 4}}, 5) == 1);
}

TEST_CASE("Smith form: structure, transforms and determinantal divisors") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntMatrix m = oracle::random_matrix(r, c, 5, rng);
    if (trial % 5 == 0 && r > 1)
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j);  // force a rank drop
    const SNFDecomposition d = snf(m);
    CHECK_NOTHROW(check_snf(d));
    CHECK(d.s * d.d * d.t == m);
    CHECK(d.s * d.s_inv == IntMatrix::identity(r));
    CHECK(d.t * d.t_inv == IntMatrix::identity(c));
    CHECK(d.rank == oracle::rational_rank(m));
    const std::vector<Integer> expected = oracle::invariant_factors(m);
    REQUIRE(expected.size() == d.rank);
    for (std::size_t i = 0; i < d.rank; ++i) CHECK(d.diagonal(i) == expected[i]);
    for (std::size_t i = d.rank; i < d.diagonal_length(); ++i) CHECK(d.diagonal(i) == 0);
  }
}

TEST_CASE("Smith form of known matrices") {
  const SNFDecomposition a = snf(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  CHECK(a.diagonal(0) == 2);
  CHECK(a.diagonal(1) == 6);
  CHECK(a.diagonal(2) == 12);
  const SNFDecomposition z = snf(IntMatrix(2, 3));
  CHECK(z.rank == 0);
  CHECK(z.s * z.d * z.t == IntMatrix(2, 3));
}

TEST_CASE("check_snf rejects a corrupted decomposition") {
  SNFDecomposition d = snf(IntMatrix{{4, 0}, {0, 6}});
  CHECK(d.diagonal(0) == 2);
  CHECK(d.diagonal(1) == 12);
  d.d(0, 0) = 3;
  CHECK_THROWS_AS(check_snf(d), std::logic_error);
}

TEST_CASE("p_part profiles") {
  const SNFDecomposition d = snf(IntMatrix{{2, 0, 0}, {0, 12, 0}, {0, 0, 0}});
  const PPartProfile two = p_part(d, 2);
  CHECK(two.exponents == std::vector<unsigned>{1, 2});
  CHECK(two.mu == 2);
  CHECK(p_part(d, 3).mu == 1);
  CHECK(p_part(d, 5).mu == 0);
  CHECK_THROWS_AS(p_part(d, 4), std::invalid_argument);
  CHECK(p_part(snf(IntMatrix(2, 2)), 2).mu == 0);
}

TEST_CASE("integer kernel basis") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 3, c = 1 + rng() % 5;
    const IntMatrix m = oracle::random_matrix(r, c, 4, rng);
    const auto basis = kernel_basis_Z(m);
    CHECK(basis.size() == c - oracle::rational_rank(m));
    for (const auto& v : basis) CHECK(is_zero_vector(m * v));
    // Saturation: the kernel basis extends to a unimodular matrix iff its
    // maximal minors are coprime.
    if (!basis.empty()) {
      const IntMatrix k = IntMatrix::from_columns(basis);
      CHECK(oracle::determinantal_divisor(k, basis.size()) == 1);
    }
  }
  CHECK(kernel_basis_Z(IntMatrix{{1, 0}, {0, 1}}).empty());
}

TEST_CASE("kernel mod prime powers matches enumeration") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = 1 + rng() % 3, c = 1 + rng() % 3;
    const IntMatrix m = oracle::random_matrix(r, c, 8, rng);
    for (long q : {2L, 3L, 4L, 8L, 9L, 5L}) {
      const auto gens = kernel_mod(m, q);
      std::set<IntVector> span;
      // Closure of the generators under addition mod q.
      span.insert(IntVector(c, 0));
      bool grew = true;
      while (grew) {
        grew = false;
        std::vector<IntVector> cur(span.begin(), span.end());
        for (const auto& v : cur)
          for (const auto& g : gens) {
            IntVector w(c);
            for (std::size_t i = 0; i < c; ++i) w[i] = mod_floor(Integer(v[i] + g[i]), Integer(q));
            grew |= span.insert(w).second;
          }
      }
      const auto all = oracle::brute_kernel_mod(m, q);
      CHECK(std::set<IntVector>(all.begin(), all.end()) == span);
      for (const auto& g : gens)
        for (const auto& x : g) CHECK((x >= 0 && x < q));
    }
  }
  CHECK_THROWS_AS(kernel_mod(IntMatrix{{1, 2}}, 6), std::invalid_argument);
}

TEST_CASE("Hermite normal form") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const std::size_t rows = n + rng() % 3;
    const IntMatrix m = oracle::random_matrix(rows, n, 7, rng);
    if (oracle::rational_rank(m) != n) continue;
    const IntMatrix h = hermite_normal_form(m);
    REQUIRE(h.rows() == n);
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(h(i, i) > 0);
      for (std::size_t j = 0; j < i; ++j) CHECK(h(i, j) == 0);
      for (std::size_t k = 0; k < i; ++k) CHECK((h(k, i) >= 0 && h(k, i) < h(i, i)));
    }
    CHECK(same_rowspan(h, hermite_normal_form(h)));
    CHECK(hermite_normal_form(h) == h);
    // Every input row lies in the span of h and vice versa.
    for (std::size_t i = 0; i < rows; ++i) CHECK(oracle::in_rowspan(h, as_rational(m.row(i))));
    const Integer d = oracle::determinantal_divisor(m, n);
    CHECK(abs(det(h)) == d);
  }
}

TEST_CASE("adjugate and unimodular inverse") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const IntMatrix m = oracle::random_matrix(n, n, 5, rng);
    if (oracle::laplace_det(m) == 0) {
      CHECK_THROWS_AS(adjugate(m), std::invalid_argument);
      continue;
    }
    const Adjugate a = adjugate(m);
    CHECK(a.det == oracle::laplace_det(m));
    CHECK(m * a.adj == a.det * IntMatrix::identity(n));
  }
  const IntMatrix u{{2, 1}, {1, 1}};
  CHECK(u * unimodular_inverse(u) == IntMatrix::identity(2));
  CHECK_THROWS(unimodular_inverse(IntMatrix{{2, 0}, {0, 1}}));
}

TEST_CASE("vec and unvec are column-major inverses") {
  const IntMatrix x{{1, 2}, {3, 4}};
  CHECK(vec(x) == IntVector{1, 3, 2, 4});
  CHECK(unvec(vec(x), 2) == x);
}

TEST_CASE("number theory helpers") {
  CHECK(factor(Integer(-12)) == std::map<Integer, unsigned>{{2, 2}, {3, 1}});
  const Integer big = Integer("1000000007") * Integer("998244353") * 4;
  const auto f = factor(big);
  CHECK(f.at(2) == 2);
  CHECK(f.at(Integer("1000000007")) == 1);
  CHECK(f.at(Integer("998244353")) == 1);
  CHECK(valuation(Integer(48), 2) == 4);
  CHECK(crt({2, 3}, {3, 5}) == 8);
  CHECK(divisors(Integer(12)) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
  CHECK(prime_power_parts(Integer(27))->second == 3);
  CHECK_FALSE(prime_power_parts(Integer(12)));
  CHECK(small_primes_not_dividing(Integer(6), 3) == std::vector<long>{5, 7, 11});
}
