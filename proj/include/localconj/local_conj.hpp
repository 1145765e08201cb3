#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "localconj/poly.hpp"
#include "localconj/sylvester.hpp"

namespace localconj {

/// A x == x B mod p^(mu+1) with det x a unit mod p.
struct UnitModCert {
  IntMatrix x;
  Integer prime;
  unsigned mu = 0;
  Integer modulus;
};

/// A q = q B, A s = s B exactly, gcd(det q, det s) = 1.
struct IntegerPairCert {
  IntMatrix q;
  IntMatrix s;
};

/// A P = P B with |det P| = 1.
struct GlobalCert {
  IntMatrix p_matrix;
};

using Certificate = std::variant<std::monostate, UnitModCert, IntegerPairCert, GlobalCert>;

struct Verdict {
  bool conjugate = false;
  std::optional<Integer> prime;  // empty: the verdict covers every prime
  Certificate certificate;
  unsigned mu_used = 0;

  // Populated by conjugate_over_all_Zp only.
  std::vector<Integer> screened_primes;
  std::vector<Verdict> per_prime;
  std::optional<Integer> failing_prime;
};

struct EllInvariant {
  Integer prime;
  unsigned ell = 0;
};

/// Shared characteristic polynomial of a and b. Throws PreconditionError when the
/// polynomials differ or are reducible, std::invalid_argument on bad shapes.
IntPoly common_charpoly(const IntMatrix& a, const IntMatrix& b);

/// Similarity over Z_p, decided as similarity over Z/p^(mu+1).
Verdict conjugate_over_Zp(const IntMatrix& a, const IntMatrix& b, const Integer& p);

/// Similarity over Z_p for every prime p. Only primes with p^2 | disc(f) can
/// fail; the rest are skipped. A valid unimodular conjugator may be supplied
/// and is then attached as a GlobalCert.
Verdict conjugate_over_all_Zp(const IntMatrix& a, const IntMatrix& b,
                              const std::optional<IntMatrix>& conjugator = std::nullopt);

/// Re-checks every certificate invariant from scratch.
bool verify_cert(const IntMatrix& a, const IntMatrix& b, const Certificate& cert);

/// True iff a has a cyclic vector mod p, i.e. a is similar to companion(f) over Z_p.
bool companion_test(const IntMatrix& a, const Integer& p);

/// For 2x2 a: the largest k with a == lambda I mod p^k for some integer lambda.
EllInvariant ell_invariant(const IntMatrix& a, const Integer& p);

/// Primes p with p^2 | disc(f), ascending.
std::vector<Integer> screen_primes(const IntPoly& f);

/// Coefficients c in [0, p) with det(sum c_i basis_i) != 0 mod p, if any exist.
/// Exhaustive over the projective space when p <= 7 and the span has
/// dimension <= 6 (or when p <= n); otherwise seeded random sampling followed by
/// an exhaustive fallback. In exhaustive mode the witness with the
/// lexicographically smallest vec(X mod p) is returned.
std::optional<IntVector> find_unit_combination(const std::vector<IntMatrix>& basis, const Integer& p);

/// Best-effort search for exact intertwiners with coprime determinants.
std::optional<IntegerPairCert> find_integer_pair(const SylvesterOperator& op);

}  // namespace localconj
