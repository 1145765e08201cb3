#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "localconj/int_matrix.hpp"
#include "localconj/poly.hpp"

namespace localconj {

/// How the second matrix of a generated pair is produced.
///  unimodular:  b = P^{-1} a P with P in GL_n(Z), recorded as the conjugator.
///  singular:p:  b represents multiplication by beta on p^k Z[beta] + x Z[beta]
///               (k in {1, 2}), then scrambled by a random unimodular matrix.
///  random:      one of the two, chosen by the seed.
struct Strategy {
  enum class Kind { Unimodular, Singular, Random } kind = Kind::Unimodular;
  Integer prime;  // Singular only

  /// Parses "unimodular", "singular:<p>" or "random"; throws std::invalid_argument.
  static Strategy parse(const std::string& text);
  std::string to_string() const;
};

struct GeneratedPair {
  IntMatrix a;
  IntMatrix b;
  std::optional<IntMatrix> conjugator;  // a P = P b, |det P| = 1
  std::string strategy;                 // the concrete strategy used
};

/// Random P in GL_n(Z) built from `steps` elementary operations with small multipliers.
IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng, std::size_t steps = 4);

/// Deterministic in (f, strategy, seed). Throws PreconditionError if f is
/// not monic irreducible.
GeneratedPair generate_pair(const IntPoly& f, const Strategy& strategy, std::uint64_t seed);

}  // namespace localconj
