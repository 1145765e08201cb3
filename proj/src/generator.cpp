#include "localconj/generator.hpp"

#include <stdexcept>

#include "localconj/exact_linalg.hpp"
#include "localconj/ideal.hpp"
#include "localconj/local_conj.hpp"
#include "localconj/number_theory.hpp"

namespace localconj {

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// P^{-1} m P for unimodular P.
IntMatrix conjugate_by(const IntMatrix& m, const IntMatrix& p) { return unimodular_inverse(p) * m * p; }

GeneratedPair unimodular_pair(const IntMatrix& c, std::mt19937_64& rng) {
  const std::size_t n = c.rows();
  const IntMatrix a = conjugate_by(c, random_unimodular(n, rng));
  const IntMatrix p = random_unimodular(n, rng);
  return GeneratedPair{a, conjugate_by(a, p), p, "unimodular"};
}

GeneratedPair singular_pair(const IntPoly& f, const IntMatrix& c, const Integer& prime, std::mt19937_64& rng) {
  const std::size_t n = c.rows();
  const FieldPtr k = NumberField::make(f);
  const unsigned e = static_cast<unsigned>(draw(rng, 1, 2));
  const Integer pe = power(prime, e);
  IntVector x(n);
  for (auto& v : x) v = Integer(static_cast<unsigned long>(rng() % 1000003UL)) % pe;
  std::vector<FieldElement> gens;
  FieldElement power_of_beta = FieldElement::one(k);
  for (std::size_t i = 0; i < n; ++i) {
    gens.push_back(FieldElement::integer(k, pe) * power_of_beta);
    gens.push_back(FieldElement(k, x) * power_of_beta);
    power_of_beta = power_of_beta * FieldElement::beta(k);
  }
  const IdealLattice ideal = IdealLattice::from_generators(k, gens);

  // Rows m_i of M are coordinates of a Z-basis of the ideal; beta m_i = m_i C,
  // so the matrix of multiplication by beta in this basis is M C M^{-1}.
  const IntMatrix& m = ideal.basis();
  const Adjugate inv = adjugate(m);
  IntMatrix b0 = m * c * inv.adj;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (mpz_divisible_p(b0(i, j).get_mpz_t(), inv.det.get_mpz_t()) == 0)
        throw std::logic_error("generate_pair: ideal is not a Z[beta]-module");
      mpz_divexact(b0(i, j).get_mpz_t(), b0(i, j).get_mpz_t(), inv.det.get_mpz_t());
    }
  const IntMatrix a = conjugate_by(c, random_unimodular(n, rng));
  return GeneratedPair{a, conjugate_by(b0, random_unimodular(n, rng)), std::nullopt, "singular:" + prime.get_str()};
}

}  // namespace

Strategy Strategy::parse(const std::string& text) {
  Strategy s;
  if (text == "unimodular") return s;
  if (text == "random") {
    s.kind = Kind::Random;
    return s;
  }
  const std::string prefix = "singular:";
  if (text.rfind(prefix, 0) == 0) {
    s.kind = Kind::Singular;
    if (s.prime.set_str(text.substr(prefix.size()), 10) != 0 || !is_prime(s.prime))
      throw std::invalid_argument("strategy: '" + text + "' does not name a prime");
    return s;
  }
  throw std::invalid_argument("unknown strategy '" + text + "'");
}

std::string Strategy::to_string() const {
  switch (kind) {
    case Kind::Unimodular:
      return "unimodular";
    case Kind::Singular:
      return "singular:" + prime.get_str();
    case Kind::Random:
      break;
  }
  return "random";
}

IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, std::size_t steps) {
  IntMatrix p = IntMatrix::identity(n);
  if (n < 2) return p;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(rng() % n);
    auto j = static_cast<std::size_t>(rng() % (n - 1));
    if (j >= i) ++j;
    switch (rng() % 4) {
      case 0:
        p.swap_rows(i, j);
        break;
      case 1:
        p.negate_row(i);
        break;
      default: {
        long c = draw(rng, -2, 1);
        if (c >= 0) ++c;
        p.add_row_multiple(i, j, c);
      }
    }
  }
  return p;
}

GeneratedPair generate_pair(const IntPoly& f, const Strategy& strategy, std::uint64_t seed) {
  NumberField::make(f);
  const IntMatrix c = companion(f);
  std::mt19937_64 rng(seed);
  Strategy s = strategy;
  if (s.kind == Strategy::Kind::Random) {
    if (rng() % 2 == 0) {
      s.kind = Strategy::Kind::Unimodular;
    } else {
      s.kind = Strategy::Kind::Singular;
      std::vector<Integer> primes = screen_primes(f);
      if (primes.empty()) primes = {2, 3};
      s.prime = primes[rng() % primes.size()];
    }
  }
  if (s.kind == Strategy::Kind::Unimodular) return unimodular_pair(c, rng);
  return singular_pair(f, c, s.prime, rng);
}

}  // namespace localconj
