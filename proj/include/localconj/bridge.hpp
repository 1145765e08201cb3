#pragma once

#include <vector>

#include "localconj/ideal.hpp"

namespace localconj {

/// Right eigenvector of A for beta in K^n: A u = beta u.
struct EigenData {
  FieldPtr field;
  std::vector<FieldElement> u;  // first nonzero coordinate is 1
  Rational scale;               // scale * u is the primitive integral tuple
};

/// Throws PreconditionError if charpoly(a) is reducible or n < 2.
EigenData eigenvector(const IntMatrix& a);

/// scale * u_i: coordinates of a primitive integer tuple spanning I_A.
std::vector<FieldElement> lattice_generators(const EigenData& e);

/// I_A = span_Z of the eigenvector coordinates.
IdealLattice ideal_of_matrix(const IntMatrix& a);

/// True iff the u_i (up to the common scale) form a Z-basis of i and
/// beta u_i = sum_j a_ij u_j for every i.
bool verify_multiplication_rep(const IntMatrix& a, const IdealLattice& i, const EigenData& e);

}  // namespace localconj
