#pragma once

#include <vector>

#include "localconj/int_matrix.hpp"

namespace localconj {

/// original = s * d * t with s, t unimodular and d diagonal, d_1 | d_2 | ... >= 0.
///
/// The inverses of the transforms are kept alongside them because every
/// consumer (integer kernels, kernels mod p^k, lifting, lattice duals) needs
/// one of them and tracking them during elimination costs the same row and
/// column operations.
struct SNFDecomposition {
  IntMatrix s;
  IntMatrix d;
  IntMatrix t;
  IntMatrix original;
  IntMatrix s_inv;
  IntMatrix t_inv;
  std::size_t rank = 0;

  std::size_t diagonal_length() const { return d.rows() < d.cols() ? d.rows() : d.cols(); }
  const Integer& diagonal(std::size_t i) const { return d(i, i); }
};

/// The p-part of a Smith normal form: valuations of the nonzero invariant factors.
struct PPartProfile {
  Integer prime;
  std::vector<unsigned> exponents;  // nondecreasing
  unsigned mu = 0;                  // max exponent, 0 when there are none
};

/// Fraction-free (Bareiss) determinant.
Integer det(const IntMatrix& m);

/// Determinant reduced into [0, p) for a prime p.
Integer det_mod(const IntMatrix& m, const Integer& p);

/// Rank of m over Z/pZ, p prime.
std::size_t rank_mod(const IntMatrix& m, const Integer& p);

Integer gcd_of_entries(const IntMatrix& m);

SNFDecomposition snf(const IntMatrix& m);

/// Throws std::logic_error if any decomposition invariant fails.
void check_snf(const SNFDecomposition& decomp);

PPartProfile p_part(const SNFDecomposition& decomp, const Integer& p);

/// Z-basis of the integer kernel {x : m x = 0}; empty when the kernel is trivial.
std::vector<IntVector> kernel_basis_Z(const IntMatrix& m);
std::vector<IntVector> kernel_basis_Z(const SNFDecomposition& decomp);

/// Generators (entries in [0, modulus)) of {x mod q : m x == 0 mod q} for a prime power q.
std::vector<IntVector> kernel_mod(const IntMatrix& m, const Integer& modulus);
std::vector<IntVector> kernel_mod(const SNFDecomposition& decomp, const Integer& modulus);

/// Row-style Hermite normal form of the lattice spanned by the rows of m:
/// the nonzero rows in echelon form, positive pivots, entries above each
/// pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(const IntMatrix& m);

/// Inverse of a square nonsingular matrix over Q, as (adjugate, det) with inverse = adj / det.
struct Adjugate {
  IntMatrix adj;
  Integer det;
};
Adjugate adjugate(const IntMatrix& m);

/// Inverse of a unimodular matrix. Throws if |det m| != 1.
IntMatrix unimodular_inverse(const IntMatrix& m);

}  // namespace localconj
