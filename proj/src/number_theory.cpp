#include "localconj/number_theory.hpp"

#include <algorithm>
#include <stdexcept>

namespace localconj {

namespace {

constexpr unsigned long kTrialBound = 1000000;

// Brent's variant of Pollard rho; n composite and odd.
Integer pollard_rho(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, ys, g = 1, q = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](const Integer& v) { return mod_floor(v * v + c, n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          q = mod_floor(q * abs(x - y), n);
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        Integer d = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

unsigned valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  Integer rest;
  return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Integer power(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

std::optional<std::pair<Integer, unsigned>> prime_power_parts(const Integer& m) {
  if (m < 2) return std::nullopt;
  auto f = factor(m);
  if (f.size() != 1) return std::nullopt;
  return std::make_pair(f.begin()->first, f.begin()->second);
}

std::map<Integer, unsigned> factor(const Integer& n) {
  if (n == 0) throw std::invalid_argument("factor: zero has no factorization");
  std::map<Integer, unsigned> out;
  Integer m = abs(n);
  for (unsigned long d = 2; d <= kTrialBound; d += (d == 2 ? 1 : 2)) {
    if (m == 1) break;
    if (Integer(d) * d > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), d)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), d);
        ++e;
      }
      out[Integer(d)] = e;
    }
  }
  factor_into(m, out);
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> ds{1};
  for (const auto& [p, e] : factor(n)) {
    const std::size_t base = ds.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

Integer crt(const std::vector<Integer>& residues, const std::vector<Integer>& moduli) {
  if (residues.size() != moduli.size()) throw std::invalid_argument("crt: size mismatch");
  Integer x = 0, m = 1;
  for (std::size_t i = 0; i < moduli.size(); ++i) {
    // x' = x + m * t with x + m t == r_i (mod m_i)
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), moduli[i].get_mpz_t()) == 0 && moduli[i] != 1)
      throw std::invalid_argument("crt: moduli not coprime");
    Integer t = mod_floor((residues[i] - x) * inv, moduli[i]);
    x += m * t;
    m *= moduli[i];
    x = mod_floor(x, m);
  }
  return x;
}

std::vector<long> small_primes_not_dividing(const Integer& avoid, std::size_t count) {
  std::vector<long> out;
  for (long p = 2; out.size() < count; ++p) {
    bool prime = true;
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    if (avoid != 0 && mpz_divisible_ui_p(avoid.get_mpz_t(), static_cast<unsigned long>(p))) continue;
    out.push_back(p);
  }
  return out;
}

}  // namespace localconj
