#pragma once

#include <stdexcept>

namespace localconj {

/// A mathematical precondition of an operation does not hold for the given
/// inputs (differing or reducible characteristic polynomials, a vector not in
/// the kernel mod p^(mu+lambda), a non-inclusion of lattices, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace localconj
