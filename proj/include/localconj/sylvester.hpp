#pragma once

#include "localconj/exact_linalg.hpp"

namespace localconj {

/// The intertwining operator X -> A X - X B on n x n integer matrices,
/// realized as an n^2 x n^2 matrix acting on column-major vec(X).
class SylvesterOperator {
 public:
  SylvesterOperator(IntMatrix a, IntMatrix b);

  const IntMatrix& a() const { return a_; }
  const IntMatrix& b() const { return b_; }
  const IntMatrix& matrix() const { return l_; }
  std::size_t n() const { return a_.rows(); }

  /// A X - X B evaluated directly.
  IntMatrix apply(const IntMatrix& x) const;

  const SNFDecomposition& smith() const { return smith_; }

 private:
  IntMatrix a_, b_, l_;
  SNFDecomposition smith_;
};

SylvesterOperator build_operator(const IntMatrix& a, const IntMatrix& b);

/// Largest p-valuation among the nonzero invariant factors of the operator.
unsigned mu(const SylvesterOperator& op, const Integer& p);

/// Exact kernel vector congruent to x_approx mod p^lambda, given
/// L x_approx == 0 mod p^(mu + lambda). Throws PreconditionError otherwise.
IntVector lift_kernel(const SylvesterOperator& op, const IntVector& x_approx, const Integer& p, unsigned lambda);

/// lift_kernel with lambda = 1: an exact kernel vector congruent to x_mod mod p.
IntVector lift_padic_solution(const SylvesterOperator& op, const IntVector& x_mod, const Integer& p);

/// Z-basis of {X : A X = X B}, as matrices.
std::vector<IntMatrix> intertwiner_basis(const SylvesterOperator& op);

}  // namespace localconj
