#pragma once

#include <optional>
#include <string>
#include <vector>

#include "localconj/number_field.hpp"

namespace localconj {

/// A full-rank Z-lattice (1/denominator) * rowspan(basis) in K, coordinates
/// taken with respect to the power basis 1, beta, ..., beta^(n-1).
///
/// The basis is kept in upper-triangular Hermite form with positive diagonal
/// and the denominator is minimal, so two lattices are equal exactly when
/// their representations are.
class IdealLattice {
 public:
  /// Lattice spanned by arbitrary generators; throws if they do not span rank n.
  static IdealLattice from_generators(FieldPtr field, const std::vector<FieldElement>& gens);
  /// Lattice spanned by the integer rows of m, divided by den.
  static IdealLattice from_integer_rows(FieldPtr field, const IntMatrix& m, const Integer& den = 1);
  /// Z[beta].
  static IdealLattice equation_order(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  std::size_t degree() const { return field_->degree(); }
  const Integer& denominator() const { return den_; }
  const IntMatrix& basis() const { return basis_; }

  /// The basis rows as field elements.
  std::vector<FieldElement> generators() const;

  bool contains(const FieldElement& x) const;
  bool contains(const IdealLattice& other) const;

  /// alpha * this.
  IdealLattice scaled(const FieldElement& alpha) const;

  friend bool operator==(const IdealLattice& a, const IdealLattice& b) {
    return a.den_ == b.den_ && a.basis_ == b.basis_;
  }

 private:
  IdealLattice(FieldPtr field, IntMatrix basis, Integer den);
  FieldPtr field_;
  Integer den_;
  IntMatrix basis_;
};

/// An order of K containing Z[beta]: contains 1 and beta and is closed under products.
class Order {
 public:
  /// Throws std::logic_error if the ring axioms fail.
  explicit Order(IdealLattice lattice);
  static Order equation_order(FieldPtr field);

  const IdealLattice& lattice() const { return lattice_; }
  friend bool operator==(const Order& a, const Order& b) { return a.lattice_ == b.lattice_; }

 private:
  IdealLattice lattice_;
};

IdealLattice mul(const IdealLattice& i, const IdealLattice& j);
IdealLattice add(const IdealLattice& i, const IdealLattice& j);
IdealLattice intersect(const IdealLattice& i, const IdealLattice& j);

/// (J : I) = {x in K : x I subset J}.
IdealLattice quotient(const IdealLattice& j, const IdealLattice& i);

/// (I : I).
Order coeff_ring(const IdealLattice& i);

/// I (R : I) == R, for an R-ideal I.
bool is_invertible(const IdealLattice& i, const Order& r);

/// Witnesses X = (I : J), Y = (J : I); weakly equivalent iff 1 is in X Y.
struct WeakEquivalence {
  bool equivalent = false;
  IdealLattice x;
  IdealLattice y;
};
WeakEquivalence weak_equivalence(const IdealLattice& i, const IdealLattice& j);
bool weakly_equivalent(const IdealLattice& i, const IdealLattice& j);

/// j == alpha * i.
bool verify_arith_equiv(const IdealLattice& i, const IdealLattice& j, const FieldElement& alpha);

/// [super : sub] for sub contained in super.
Integer index(const IdealLattice& sub, const IdealLattice& super);

/// Smallest positive m in I (so that I cap Z = mZ).
Integer intersect_with_Z(const IdealLattice& i);

/// [R : I] is a power of p. Cross-checks p^k R subset I and I cap Z = p^j Z.
bool in_Id_p(const IdealLattice& i, const Order& r, const Integer& p);

/// u(I) = R I for an S-ideal I, S subset R.
IdealLattice up_map(const IdealLattice& i, const Order& s, const Order& r);
/// d(J) = J cap S for an R-ideal J, S subset R.
IdealLattice down_map(const IdealLattice& j, const Order& r, const Order& s);

/// theta(t) = numerator(t) / denominator with integer coefficients.
struct ScaledPoly {
  IntPoly numerator;
  Integer denominator = 1;
};

/// theta(A) has integer entries.
bool theta_membership(const ScaledPoly& theta, const IntMatrix& a);

/// theta(beta) as a field element.
FieldElement evaluate_at_beta(const ScaledPoly& theta, const FieldPtr& field);

std::string to_string(const IdealLattice& i);

}  // namespace localconj
