#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "localconj/int_matrix.hpp"

namespace localconj {

bool is_prime(const Integer& n);

/// p-adic valuation of a nonzero integer.
unsigned valuation(const Integer& n, const Integer& p);

Integer power(const Integer& base, unsigned long exp);

/// If m = p^k for a prime p and k >= 1, returns (p, k).
std::optional<std::pair<Integer, unsigned>> prime_power_parts(const Integer& m);

/// Prime factorization of |n| (n != 0): trial division up to 10^6, then Pollard rho.
std::map<Integer, unsigned> factor(const Integer& n);

/// All positive divisors of |n| (n != 0), ascending.
std::vector<Integer> divisors(const Integer& n);

/// Chinese remaindering for pairwise coprime moduli. Result lies in [0, prod m).
Integer crt(const std::vector<Integer>& residues, const std::vector<Integer>& moduli);

/// The first `count` primes not dividing `avoid` (avoid = 0 forbids nothing but zero).
std::vector<long> small_primes_not_dividing(const Integer& avoid, std::size_t count);

}  // namespace localconj
