#include "localconj/local_conj.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "localconj/errors.hpp"
#include "localconj/number_theory.hpp"

namespace localconj {

namespace {

constexpr unsigned kPairAttempts = 100;

IntMatrix combine(const std::vector<IntMatrix>& basis, const IntVector& c) {
  IntMatrix x(basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (c[i] != 0) x += c[i] * basis[i];
  return x;
}

bool lex_less(const IntVector& a, const IntVector& b) { return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()); }

// Walks the projective space of (Z/p)^k, first nonzero coordinate 1.
std::optional<IntVector> enumerate_projective(const std::vector<IntMatrix>& basis, const Integer& p) {
  const std::size_t k = basis.size();
  std::optional<IntVector> best;
  IntVector best_key;
  for (std::size_t lead = 0; lead < k; ++lead) {
    IntVector c(k);
    c[lead] = 1;
    for (;;) {
      IntMatrix x = mod_floor(combine(basis, c), p);
      if (det_mod(x, p) != 0) {
        IntVector key = vec(x);
        if (!best || lex_less(key, best_key)) {
          best = c;
          best_key = std::move(key);
        }
      }
      std::size_t j = lead + 1;
      while (j < k) {
        if (++c[j] < p) break;
        c[j] = 0;
        ++j;
      }
      if (j == k) break;
    }
  }
  return best;
}

bool is_unit_combination(const std::vector<IntMatrix>& basis, const IntVector& c, const Integer& p) {
  return det_mod(combine(basis, c), p) != 0;
}

}  // namespace

IntPoly common_charpoly(const IntMatrix& a, const IntMatrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
    throw std::invalid_argument("matrices must be square of equal size");
  IntPoly f = charpoly(a);
  if (!(charpoly(b) == f)) throw PreconditionError("characteristic polynomials differ");
  if (!is_irreducible(f)) throw PreconditionError("characteristic polynomial " + to_string(f) + " is reducible");
  return f;
}

std::optional<IntVector> find_unit_combination(const std::vector<IntMatrix>& basis, const Integer& p) {
  if (basis.empty()) return std::nullopt;
  const std::size_t k = basis.size();
  const std::size_t n = basis.front().rows();
  std::vector<IntMatrix> reduced;
  for (const auto& m : basis) reduced.push_back(mod_floor(m, p));

  const bool exhaustive = (p <= 7 && k <= 6) || p <= static_cast<unsigned long>(n);
  if (exhaustive) return enumerate_projective(reduced, p);

  // det is a degree-n form, so a uniform sample is invertible with
  // probability >= 1 - n/p whenever some element is.
  const double ratio = p.get_d() / (p.get_d() - static_cast<double>(n));
  const auto trials = static_cast<unsigned long>(std::ceil(40.0 / std::log2(ratio)));
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(mod_floor(p, Integer("18446744073709551557")) + 0x5eed);
  for (unsigned long t = 0; t < trials; ++t) {
    IntVector c(k);
    for (auto& v : c) v = rng.get_z_range(p);
    if (is_zero_vector(c)) continue;
    if (is_unit_combination(reduced, c, p)) return c;
  }
  return enumerate_projective(reduced, p);
}

Verdict conjugate_over_Zp(const IntMatrix& a, const IntMatrix& b, const Integer& p) {
  common_charpoly(a, b);
  if (!is_prime(p)) throw std::invalid_argument("conjugate_over_Zp: " + p.get_str() + " is not prime");
  const SylvesterOperator op(a, b);
  const unsigned m = mu(op, p);
  const Integer modulus = power(p, m + 1);

  Verdict v;
  v.prime = p;
  v.mu_used = m;
  if (a == b) {
    v.conjugate = true;
    v.certificate = UnitModCert{IntMatrix::identity(a.rows()), p, m, modulus};
    return v;
  }
  // The mod-p image of {x mod p^(mu+1) : L x == 0} is spanned by the reduced
  // kernel_mod generators; a unit determinant only depends on x mod p.
  std::vector<IntMatrix> gens;
  for (const auto& g : kernel_mod(op.smith(), modulus))
    if (!is_zero_vector(mod_floor(g, p))) gens.push_back(unvec(g, a.rows()));
  if (auto c = find_unit_combination(gens, p)) {
    v.conjugate = true;
    v.certificate = UnitModCert{mod_floor(combine(gens, *c), modulus), p, m, modulus};
  }
  return v;
}

std::optional<IntegerPairCert> find_integer_pair(const SylvesterOperator& op) {
  const std::vector<IntMatrix> basis = intertwiner_basis(op);
  if (basis.empty()) return std::nullopt;
  const std::size_t k = basis.size();
  std::mt19937_64 rng(0x9a1c);
  for (unsigned attempt = 0; attempt < kPairAttempts; ++attempt) {
    IntVector c(k);
    if (attempt < k) {
      c[attempt] = 1;
    } else {
      for (auto& v : c) v = static_cast<long>(rng() % 7) - 3;
    }
    const IntMatrix q = combine(basis, c);
    const Integer dq = det(q);
    if (dq == 0) continue;
    if (dq == 1 || dq == -1) return IntegerPairCert{q, q};

    // Pick s with det s a unit at every prime dividing det q, by CRT on the
    // kernel coordinates.
    std::vector<IntVector> residues;
    std::vector<Integer> primes;
    for (const auto& [prime, e] : factor(dq)) {
      auto cq = find_unit_combination(basis, prime);
      if (!cq) return std::nullopt;  // not conjugate over Z_prime
      residues.push_back(std::move(*cq));
      primes.push_back(prime);
    }
    IntVector cs(k);
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Integer> r;
      for (const auto& res : residues) r.push_back(res[i]);
      cs[i] = crt(r, primes);
    }
    const IntMatrix s = combine(basis, cs);
    Integer g;
    const Integer ds = det(s);
    mpz_gcd(g.get_mpz_t(), dq.get_mpz_t(), ds.get_mpz_t());
    if (g == 1) return IntegerPairCert{q, s};
  }
  return std::nullopt;
}

Verdict conjugate_over_all_Zp(const IntMatrix& a, const IntMatrix& b, const std::optional<IntMatrix>& conjugator) {
  const IntPoly f = common_charpoly(a, b);
  Verdict v;
  v.screened_primes = screen_primes(f);
  v.conjugate = true;
  for (const auto& p : v.screened_primes) {
    Verdict local = conjugate_over_Zp(a, b, p);
    v.mu_used = std::max(v.mu_used, local.mu_used);
    if (!local.conjugate) {
      v.conjugate = false;
      if (!v.failing_prime) v.failing_prime = p;
    }
    v.per_prime.push_back(std::move(local));
  }
  if (!v.conjugate) return v;
  if (conjugator && verify_cert(a, b, GlobalCert{*conjugator})) {
    v.certificate = GlobalCert{*conjugator};
  } else if (auto pair = find_integer_pair(SylvesterOperator(a, b))) {
    const Integer dq = det(pair->q);
    if (dq == 1 || dq == -1)
      v.certificate = GlobalCert{pair->q};
    else
      v.certificate = std::move(*pair);
  }
  return v;
}

bool verify_cert(const IntMatrix& a, const IntMatrix& b, const Certificate& cert) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) return false;
  const std::size_t n = a.rows();
  auto shaped = [n](const IntMatrix& x) { return x.rows() == n && x.cols() == n; };
  return std::visit(
      [&](const auto& c) -> bool {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return false;
        } else if constexpr (std::is_same_v<T, UnitModCert>) {
          if (!shaped(c.x) || !is_prime(c.prime)) return false;
          const unsigned m = mu(SylvesterOperator(a, b), c.prime);
          if (c.mu != m || c.modulus != power(c.prime, m + 1)) return false;
          if (!is_zero_mod(a * c.x - c.x * b, c.modulus)) return false;
          return det_mod(c.x, c.prime) != 0;
        } else if constexpr (std::is_same_v<T, IntegerPairCert>) {
          if (!shaped(c.q) || !shaped(c.s)) return false;
          if (!(a * c.q == c.q * b) || !(a * c.s == c.s * b)) return false;
          Integer g;
          const Integer dq = det(c.q), ds = det(c.s);
          mpz_gcd(g.get_mpz_t(), dq.get_mpz_t(), ds.get_mpz_t());
          return g == 1;
        } else {
          if (!shaped(c.p_matrix)) return false;
          if (!(a * c.p_matrix == c.p_matrix * b)) return false;
          const Integer d = det(c.p_matrix);
          return d == 1 || d == -1;
        }
      },
      cert);
}

bool companion_test(const IntMatrix& a, const Integer& p) {
  if (!a.is_square()) throw std::invalid_argument("companion_test: matrix is not square");
  if (!is_prime(p)) throw std::invalid_argument("companion_test: " + p.get_str() + " is not prime");
  const IntPoly f = charpoly(a);
  if (!is_irreducible(f)) throw PreconditionError("companion_test: characteristic polynomial is reducible");
  // A cyclic vector exists mod p iff the minimal polynomial mod p has degree n,
  // i.e. I, A, ..., A^(n-1) are independent mod p.
  const std::size_t n = a.rows();
  std::vector<IntVector> powers;
  IntMatrix pk = IntMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    powers.push_back(vec(mod_floor(pk, p)));
    pk = mod_floor(pk * a, p);
  }
  return rank_mod(IntMatrix::from_rows(powers), p) == n;
}

EllInvariant ell_invariant(const IntMatrix& a, const Integer& p) {
  if (a.rows() != 2 || a.cols() != 2) throw std::invalid_argument("ell_invariant: matrix must be 2x2");
  if (!is_prime(p)) throw std::invalid_argument("ell_invariant: " + p.get_str() + " is not prime");
  if (a(0, 1) == 0 && a(1, 0) == 0 && a(0, 0) == a(1, 1))
    throw PreconditionError("ell_invariant: scalar matrix has unbounded ell");
  EllInvariant out{p, 0};
  Integer pk = p;
  // a == lambda I mod p^k forces lambda == a11; the rest must then vanish.
  const IntMatrix off_scalar = IntMatrix::from_rows({{0, a(0, 1)}, {a(1, 0), a(1, 1) - a(0, 0)}});
  while (is_zero_mod(off_scalar, pk)) {
    ++out.ell;
    pk *= p;
  }
  return out;
}

std::vector<Integer> screen_primes(const IntPoly& f) {
  const Integer disc = discriminant(f);
  if (disc == 0) throw std::logic_error("screen_primes: zero discriminant");
  std::vector<Integer> out;
  for (const auto& [p, e] : factor(disc))
    if (e >= 2) out.push_back(p);
  return out;
}

}  // namespace localconj
