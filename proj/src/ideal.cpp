#include "localconj/ideal.hpp"

#include <sstream>
#include <stdexcept>

#include "localconj/bridge.hpp"
#include "localconj/errors.hpp"
#include "localconj/exact_linalg.hpp"
#include "localconj/number_theory.hpp"

namespace localconj {

namespace {

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

void require_same_field(const IdealLattice& a, const IdealLattice& b, const char* op) {
  if (!(a.field()->modulus() == b.field()->modulus()))
    throw std::invalid_argument(std::string(op) + ": lattices live in different fields");
}

// y with y H = c for upper-triangular nonsingular H.
std::vector<Rational> solve_row(const IntMatrix& h, const std::vector<Rational>& c) {
  const std::size_t n = h.rows();
  std::vector<Rational> y(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational acc = c[j];
    for (std::size_t i = 0; i < j; ++i) acc -= y[i] * Rational(h(i, j));
    y[j] = acc / Rational(h(j, j));
    y[j].canonicalize();
  }
  return y;
}

bool all_integral(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

Integer triangular_det(const IntMatrix& h) {
  Integer d = 1;
  for (std::size_t i = 0; i < h.rows(); ++i) d *= h(i, i);
  return d;
}

// Rows of each lattice rescaled to a shared denominator.
struct CommonDenominator {
  Integer den;
  IntMatrix first;
  IntMatrix second;
};

CommonDenominator common_denominator(const IdealLattice& i, const IdealLattice& j) {
  const Integer d = lcm(i.denominator(), j.denominator());
  return {d, Integer(d / i.denominator()) * i.basis(), Integer(d / j.denominator()) * j.basis()};
}

bool is_power_of(const Integer& m, const Integer& p) {
  if (m == 1) return true;
  auto parts = prime_power_parts(m);
  return parts && parts->first == p;
}

}  // namespace

IdealLattice::IdealLattice(FieldPtr field, IntMatrix basis, Integer den)
    : field_(std::move(field)), den_(std::move(den)), basis_(std::move(basis)) {}

IdealLattice IdealLattice::from_integer_rows(FieldPtr field, const IntMatrix& m, const Integer& den) {
  const std::size_t n = field->degree();
  if (m.cols() != n) throw std::invalid_argument("lattice rows must have length " + std::to_string(n));
  if (den <= 0) throw std::invalid_argument("lattice denominator must be positive");
  IntMatrix h = hermite_normal_form(m);
  if (h.rows() != n || h(n - 1, n - 1) == 0) throw std::invalid_argument("lattice is not of full rank");
  Integer g;
  const Integer c = gcd_of_entries(h);
  mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), den.get_mpz_t());
  if (g != 1)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) mpz_divexact(h(r, k).get_mpz_t(), h(r, k).get_mpz_t(), g.get_mpz_t());
  return IdealLattice(std::move(field), std::move(h), den / g);
}

IdealLattice IdealLattice::from_generators(FieldPtr field, const std::vector<FieldElement>& gens) {
  if (gens.empty()) throw std::invalid_argument("lattice needs generators");
  Integer d = 1;
  for (const auto& g : gens) {
    if (!(g.field()->modulus() == field->modulus())) throw std::invalid_argument("generator from another field");
    d = lcm(d, g.denominator());
  }
  std::vector<IntVector> rows;
  for (const auto& g : gens) {
    const Integer s = d / g.denominator();
    IntVector r = g.numerator();
    for (auto& x : r) x *= s;
    rows.push_back(std::move(r));
  }
  return from_integer_rows(std::move(field), IntMatrix::from_rows(rows), d);
}

IdealLattice IdealLattice::equation_order(FieldPtr field) {
  const std::size_t n = field->degree();
  return IdealLattice(std::move(field), IntMatrix::identity(n), 1);
}

std::vector<FieldElement> IdealLattice::generators() const {
  std::vector<FieldElement> out;
  for (std::size_t r = 0; r < basis_.rows(); ++r) out.emplace_back(field_, basis_.row(r), den_);
  return out;
}

bool IdealLattice::contains(const FieldElement& x) const {
  if (!(x.field()->modulus() == field_->modulus())) throw std::invalid_argument("contains: element from another field");
  std::vector<Rational> c(degree());
  for (std::size_t k = 0; k < c.size(); ++k) {
    c[k] = Rational(den_ * x.numerator()[k], x.denominator());
    c[k].canonicalize();
  }
  return all_integral(solve_row(basis_, c));
}

bool IdealLattice::contains(const IdealLattice& other) const {
  require_same_field(*this, other, "contains");
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

IdealLattice IdealLattice::scaled(const FieldElement& alpha) const {
  if (alpha.is_zero()) throw std::invalid_argument("scaled: zero multiplier");
  std::vector<FieldElement> gens;
  for (const auto& g : generators()) gens.push_back(alpha * g);
  return from_generators(field_, gens);
}

Order::Order(IdealLattice lattice) : lattice_(std::move(lattice)) {
  const FieldPtr& k = lattice_.field();
  if (!lattice_.contains(FieldElement::one(k))) throw std::logic_error("order does not contain 1");
  if (!lattice_.contains(FieldElement::beta(k))) throw std::logic_error("order does not contain beta");
  if (!(mul(lattice_, lattice_) == lattice_)) throw std::logic_error("order is not closed under multiplication");
}

Order Order::equation_order(FieldPtr field) { return Order(IdealLattice::equation_order(std::move(field))); }

IdealLattice mul(const IdealLattice& i, const IdealLattice& j) {
  require_same_field(i, j, "mul");
  const NumberField& k = *i.field();
  std::vector<IntVector> rows;
  for (std::size_t a = 0; a < i.basis().rows(); ++a)
    for (std::size_t b = 0; b < j.basis().rows(); ++b) rows.push_back(k.multiply(i.basis().row(a), j.basis().row(b)));
  return IdealLattice::from_integer_rows(i.field(), IntMatrix::from_rows(rows), i.denominator() * j.denominator());
}

IdealLattice add(const IdealLattice& i, const IdealLattice& j) {
  require_same_field(i, j, "add");
  const CommonDenominator c = common_denominator(i, j);
  std::vector<IntVector> rows;
  for (std::size_t r = 0; r < c.first.rows(); ++r) rows.push_back(c.first.row(r));
  for (std::size_t r = 0; r < c.second.rows(); ++r) rows.push_back(c.second.row(r));
  return IdealLattice::from_integer_rows(i.field(), IntMatrix::from_rows(rows), c.den);
}

IdealLattice intersect(const IdealLattice& i, const IdealLattice& j) {
  require_same_field(i, j, "intersect");
  const CommonDenominator c = common_denominator(i, j);
  const std::size_t n = i.degree();
  // y1 M1 = y2 M2  <=>  [M1^T | -M2^T] (y1; y2) = 0.
  IntMatrix stacked(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      stacked(k, r) = c.first(r, k);
      stacked(k, n + r) = -c.second(r, k);
    }
  std::vector<IntVector> rows;
  for (const auto& y : kernel_basis_Z(stacked)) {
    IntVector row(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) row[k] += y[r] * c.first(r, k);
    rows.push_back(std::move(row));
  }
  if (rows.size() != n) throw std::logic_error("intersect: kernel rank is not n");
  return IdealLattice::from_integer_rows(i.field(), IntMatrix::from_rows(rows), c.den);
}

IdealLattice quotient(const IdealLattice& j, const IdealLattice& i) {
  require_same_field(i, j, "quotient");
  // x I subset J  <=>  x in g^{-1} J for every basis element g of I.
  std::optional<IdealLattice> acc;
  for (const auto& g : i.generators()) {
    IdealLattice part = j.scaled(g.inverse());
    acc = acc ? intersect(*acc, part) : std::move(part);
  }
  return *acc;
}

Order coeff_ring(const IdealLattice& i) { return Order(quotient(i, i)); }

bool is_invertible(const IdealLattice& i, const Order& r) {
  if (!(mul(r.lattice(), i) == i)) throw PreconditionError("is_invertible: lattice is not an ideal of the order");
  return mul(i, quotient(r.lattice(), i)) == r.lattice();
}

WeakEquivalence weak_equivalence(const IdealLattice& i, const IdealLattice& j) {
  require_same_field(i, j, "weak_equivalence");
  IdealLattice x = quotient(i, j);
  IdealLattice y = quotient(j, i);
  const bool eq = mul(x, y).contains(FieldElement::one(i.field()));
  return WeakEquivalence{eq, std::move(x), std::move(y)};
}

bool weakly_equivalent(const IdealLattice& i, const IdealLattice& j) { return weak_equivalence(i, j).equivalent; }

bool verify_arith_equiv(const IdealLattice& i, const IdealLattice& j, const FieldElement& alpha) {
  require_same_field(i, j, "verify_arith_equiv");
  if (alpha.is_zero()) throw std::invalid_argument("verify_arith_equiv: alpha is zero");
  return i.scaled(alpha) == j;
}

Integer index(const IdealLattice& sub, const IdealLattice& super) {
  if (!super.contains(sub)) throw PreconditionError("index: lattice is not contained in the other");
  const auto n = static_cast<unsigned long>(sub.degree());
  Integer num = abs(triangular_det(sub.basis())) * power(super.denominator(), n);
  Integer den = abs(triangular_det(super.basis())) * power(sub.denominator(), n);
  if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0) throw std::logic_error("index: not an integer");
  return num / den;
}

Integer intersect_with_Z(const IdealLattice& i) {
  std::vector<Rational> c(i.degree());
  c[0] = i.denominator();
  Integer m = 1;
  for (const auto& y : solve_row(i.basis(), c)) m = lcm(m, y.get_den());
  return m;
}

bool in_Id_p(const IdealLattice& i, const Order& r, const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument("in_Id_p: " + p.get_str() + " is not prime");
  if (!r.lattice().contains(i)) throw PreconditionError("in_Id_p: lattice is not contained in the order");
  if (!(mul(r.lattice(), i) == i)) throw PreconditionError("in_Id_p: lattice is not an ideal of the order");
  const Integer idx = index(i, r.lattice());
  const bool by_index = is_power_of(idx, p);
  // p^k R subset I for some k forces the k below, since idx R subset I always.
  const IdealLattice pk_r = r.lattice().scaled(FieldElement::integer(i.field(), power(p, valuation(idx, p))));
  const bool by_sandwich = i.contains(pk_r);
  const bool by_integers = is_power_of(intersect_with_Z(i), p);
  if (by_index != by_sandwich || by_index != by_integers)
    throw std::logic_error("in_Id_p: membership criteria disagree for " + to_string(i));
  return by_index;
}

IdealLattice up_map(const IdealLattice& i, const Order& s, const Order& r) {
  if (!r.lattice().contains(s.lattice())) throw PreconditionError("up_map: S is not contained in R");
  if (!(mul(s.lattice(), i) == i)) throw PreconditionError("up_map: lattice is not an S-ideal");
  return mul(r.lattice(), i);
}

IdealLattice down_map(const IdealLattice& j, const Order& r, const Order& s) {
  if (!r.lattice().contains(s.lattice())) throw PreconditionError("down_map: S is not contained in R");
  if (!(mul(r.lattice(), j) == j)) throw PreconditionError("down_map: lattice is not an R-ideal");
  return intersect(j, s.lattice());
}

FieldElement evaluate_at_beta(const ScaledPoly& theta, const FieldPtr& field) {
  if (theta.denominator == 0) throw std::invalid_argument("theta: zero denominator");
  return FieldElement(field, field->reduce(theta.numerator.coefficients()), theta.denominator);
}

bool theta_membership(const ScaledPoly& theta, const IntMatrix& a) {
  if (theta.denominator == 0) throw std::invalid_argument("theta: zero denominator");
  const IntMatrix value = evaluate(theta.numerator, a);
  const bool integral = is_zero_mod(value, abs(theta.denominator));
  // theta(A) is the matrix of multiplication by theta(beta) on I_A.
  const IdealLattice ia = ideal_of_matrix(a);
  const bool in_ring = coeff_ring(ia).lattice().contains(evaluate_at_beta(theta, ia.field()));
  if (integral != in_ring) throw std::logic_error("theta_membership: matrix and ideal sides disagree");
  return integral;
}

std::string to_string(const IdealLattice& i) {
  std::ostringstream os;
  os << "(1/" << i.denominator().get_str() << ") " << i.basis();
  return os.str();
}

}  // namespace localconj
