#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "localconj/int_matrix.hpp"

namespace localconj {

/// Integer polynomial, coefficients in ascending degree. The zero polynomial has
/// no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> ascending);
  IntPoly(std::initializer_list<long> ascending);

  static IntPoly monomial(std::size_t degree, const Integer& c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const Integer& leading() const { return c_.back(); }
  const std::vector<Integer>& coefficients() const { return c_; }
  /// Coefficient of t^i (zero past the degree).
  Integer operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }

  Integer eval(const Integer& x) const;
  IntPoly derivative() const;
  Integer content() const;

  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Integer> c_;
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);

/// Human-readable form in the variable t, e.g. "t^2 - t - 1".
std::string to_string(const IntPoly& f);
std::ostream& operator<<(std::ostream& os, const IntPoly& f);

/// Parses expressions such as "t^3 - 4*t - 1" or "t^2+3" (variable t or x).
/// Throws std::invalid_argument on malformed input.
IntPoly parse_poly(std::string_view text);

/// Rational polynomial with ascending coefficients; used for exact division
/// and Euclid in Q[t].
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> ascending);
  explicit RatPoly(const IntPoly& f);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& leading() const { return c_.back(); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);

 private:
  void trim();
  std::vector<Rational> c_;
};

struct RatDivision {
  RatPoly quotient;
  RatPoly remainder;
};
RatDivision divmod(const RatPoly& a, const RatPoly& b);

/// s, t, g with s a + t b = g = monic gcd(a, b).
struct RatXgcd {
  RatPoly s, t, g;
};
RatXgcd xgcd(const RatPoly& a, const RatPoly& b);

/// det(t I - a) via Faddeev-LeVerrier with exact division.
IntPoly charpoly(const IntMatrix& a);

/// Res(f, g) by the Euclidean algorithm over Q.
Integer resultant(const IntPoly& f, const IntPoly& g);

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
Integer discriminant(const IntPoly& f);

/// Irreducibility over Q of a monic nonconstant polynomial.
bool is_irreducible(const IntPoly& f);

/// Companion matrix of a monic f: ones on the superdiagonal, last row the
/// negated coefficients c_0 ... c_{n-1}. It represents multiplication by t on
/// the power basis acting on row coordinate vectors.
IntMatrix companion(const IntPoly& f);

/// Polynomial evaluated at a square matrix (Horner).
IntMatrix evaluate(const IntPoly& p, const IntMatrix& a);

}  // namespace localconj
