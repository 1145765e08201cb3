#pragma once

#include <memory>
#include <vector>

#include "localconj/poly.hpp"

namespace localconj {

/// K = Q[t]/(f) for a monic irreducible f, with beta the class of t.
class NumberField {
 public:
  /// Throws PreconditionError unless f is monic, nonconstant and irreducible.
  static std::shared_ptr<const NumberField> make(const IntPoly& f);

  const IntPoly& modulus() const { return f_; }
  std::size_t degree() const { return static_cast<std::size_t>(f_.degree()); }

  /// Reduces an integer coefficient vector (any length) modulo f; f monic keeps it integral.
  IntVector reduce(const IntVector& ascending) const;
  /// Coordinates of x * y for integer coordinate vectors of length n.
  IntVector multiply(const IntVector& x, const IntVector& y) const;

 private:
  explicit NumberField(IntPoly f) : f_(std::move(f)) {}
  IntPoly f_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element numerator(beta) / denominator with deg numerator < n, in canonical form:
/// denominator > 0 and gcd(denominator, content(numerator)) = 1.
class FieldElement {
 public:
  FieldElement(FieldPtr field, IntVector numerator, Integer denominator = 1);

  static FieldElement zero(FieldPtr field);
  static FieldElement one(FieldPtr field);
  static FieldElement integer(FieldPtr field, const Integer& v);
  /// The generator beta.
  static FieldElement beta(FieldPtr field);
  static FieldElement from_rational_coords(FieldPtr field, const std::vector<Rational>& coords);

  const FieldPtr& field() const { return field_; }
  const IntVector& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  Rational coordinate(std::size_t i) const;
  std::vector<Rational> coordinates() const;
  bool is_zero() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
  friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
  friend bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.num_ == y.num_ && x.den_ == y.den_ && x.field_->modulus() == y.field_->modulus();
  }

  FieldElement inverse() const;
  FieldElement scaled(const Rational& c) const;

 private:
  void normalize();
  FieldPtr field_;
  IntVector num_;
  Integer den_;
};

FieldElement field_add(const FieldElement& x, const FieldElement& y);
FieldElement field_mul(const FieldElement& x, const FieldElement& y);
FieldElement field_inv(const FieldElement& x);

std::string to_string(const FieldElement& x);

}  // namespace localconj
