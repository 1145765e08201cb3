#include "localconj/sylvester.hpp"

#include <stdexcept>

#include "localconj/errors.hpp"
#include "localconj/number_theory.hpp"

namespace localconj {

SylvesterOperator::SylvesterOperator(IntMatrix a, IntMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (!a_.is_square() || !b_.is_square() || a_.rows() != b_.rows())
    throw std::invalid_argument("build_operator: a and b must be square of equal size");
  const std::size_t n = a_.rows();
  // vec index of (i, j) is i + j n. (A X)(i, j) = sum_k A(i, k) X(k, j) and
  // (X B)(i, j) = sum_k X(i, k) B(k, j), i.e. L = I (x) A - B^T (x) I.
  l_ = IntMatrix(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        l_(i + j * n, k + j * n) += a_(i, k);
        l_(i + j * n, i + k * n) -= b_(k, j);
      }
  smith_ = snf(l_);
}

IntMatrix SylvesterOperator::apply(const IntMatrix& x) const { return a_ * x - x * b_; }

SylvesterOperator build_operator(const IntMatrix& a, const IntMatrix& b) { return SylvesterOperator(a, b); }

unsigned mu(const SylvesterOperator& op, const Integer& p) { return p_part(op.smith(), p).mu; }

IntVector lift_kernel(const SylvesterOperator& op, const IntVector& x_approx, const Integer& p, unsigned lambda) {
  const SNFDecomposition& dec = op.smith();
  if (x_approx.size() != dec.t.cols()) throw std::invalid_argument("lift_kernel: vector length mismatch");
  const unsigned m = p_part(dec, p).mu;
  const Integer check_mod = power(p, m + lambda);
  const IntVector residual = op.matrix() * x_approx;
  for (const auto& v : residual)
    if (mpz_divisible_p(v.get_mpz_t(), check_mod.get_mpz_t()) == 0)
      throw PreconditionError("lift_kernel: L x is not 0 mod p^(mu+lambda)");

  // y = T x'; w_j = 0 for j < r and det(T) w_i == y_i mod p^lambda for i >= r;
  // x = det(T) T^{-1} w. det(T) = +-1, so the congruence reads w_i == det(T) y_i.
  const Integer mod = power(p, lambda);
  const Integer det_t = det(dec.t);
  const IntVector y = dec.t * x_approx;
  IntVector w(y.size());
  for (std::size_t i = dec.rank; i < y.size(); ++i) w[i] = mod_floor(det_t * y[i], mod);
  IntVector x = dec.t_inv * w;
  for (auto& v : x) v *= det_t;

  if (!is_zero_vector(op.matrix() * x)) throw std::logic_error("lift_kernel: result not in kernel");
  for (std::size_t i = 0; i < x.size(); ++i)
    if (mod_floor(x[i] - x_approx[i], mod) != 0) throw std::logic_error("lift_kernel: congruence lost");
  return x;
}

IntVector lift_padic_solution(const SylvesterOperator& op, const IntVector& x_mod, const Integer& p) {
  return lift_kernel(op, x_mod, p, 1);
}

std::vector<IntMatrix> intertwiner_basis(const SylvesterOperator& op) {
  std::vector<IntMatrix> out;
  for (const auto& v : kernel_basis_Z(op.smith())) out.push_back(unvec(v, op.n()));
  return out;
}

}  // namespace localconj
