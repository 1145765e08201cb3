#include "localconj/number_field.hpp"

#include <sstream>
#include <stdexcept>

#include "localconj/errors.hpp"

namespace localconj {

std::shared_ptr<const NumberField> NumberField::make(const IntPoly& f) {
  if (f.degree() < 1 || !f.is_monic()) throw PreconditionError("number field: modulus must be monic and nonconstant");
  if (!is_irreducible(f)) throw PreconditionError("number field: " + to_string(f) + " is reducible");
  return std::shared_ptr<const NumberField>(new NumberField(f));
}

IntVector NumberField::reduce(const IntVector& ascending) const {
  const std::size_t n = degree();
  IntVector r = ascending;
  for (std::size_t k = r.size(); k-- > n;) {
    if (r[k] == 0) continue;
    const Integer c = r[k];
    // t^k = t^(k-n) * t^n and t^n = -sum f_i t^i
    for (std::size_t i = 0; i < n; ++i) r[k - n + i] -= c * f_[i];
    r[k] = 0;
  }
  r.resize(n);
  return r;
}

IntVector NumberField::multiply(const IntVector& x, const IntVector& y) const {
  IntVector prod(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) prod[i + j] += x[i] * y[j];
  }
  return reduce(prod);
}

FieldElement::FieldElement(FieldPtr field, IntVector numerator, Integer denominator)
    : field_(std::move(field)), num_(std::move(numerator)), den_(std::move(denominator)) {
  if (!field_) throw std::invalid_argument("FieldElement: null field");
  if (den_ == 0) throw std::invalid_argument("FieldElement: zero denominator");
  num_ = field_->reduce(num_);
  normalize();
}

void FieldElement::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& v : num_) v = -v;
  }
  Integer g = den_;
  for (const auto& v : num_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (is_zero_vector(num_)) {
    den_ = 1;
    return;
  }
  if (g != 1) {
    den_ /= g;
    for (auto& v : num_) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

FieldElement FieldElement::zero(FieldPtr field) {
  const std::size_t n = field->degree();
  return FieldElement(std::move(field), IntVector(n));
}

FieldElement FieldElement::one(FieldPtr field) { return integer(std::move(field), 1); }

FieldElement FieldElement::integer(FieldPtr field, const Integer& v) {
  IntVector c(field->degree());
  c[0] = v;
  return FieldElement(std::move(field), std::move(c));
}

FieldElement FieldElement::beta(FieldPtr field) {
  IntVector c(std::max<std::size_t>(field->degree(), 2));
  c[1] = 1;
  return FieldElement(std::move(field), std::move(c));
}

FieldElement FieldElement::from_rational_coords(FieldPtr field, const std::vector<Rational>& coords) {
  Integer den = 1;
  for (const auto& c : coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  IntVector num(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) num[i] = coords[i].get_num() * (den / coords[i].get_den());
  return FieldElement(std::move(field), std::move(num), std::move(den));
}

Rational FieldElement::coordinate(std::size_t i) const {
  Rational r(num_[i], den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> FieldElement::coordinates() const {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < num_.size(); ++i) c.push_back(coordinate(i));
  return c;
}

bool FieldElement::is_zero() const { return is_zero_vector(num_); }

FieldElement FieldElement::operator-() const {
  IntVector n = num_;
  for (auto& v : n) v = -v;
  return FieldElement(field_, std::move(n), den_);
}

namespace {
void require_same_field(const FieldElement& x, const FieldElement& y) {
  if (x.field() != y.field() && !(x.field()->modulus() == y.field()->modulus()))
    throw std::invalid_argument("field elements from different fields");
}
}  // namespace

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  IntVector n(x.num_.size());
  for (std::size_t i = 0; i < n.size(); ++i) n[i] = x.num_[i] * y.den_ + y.num_[i] * x.den_;
  return FieldElement(x.field_, std::move(n), x.den_ * y.den_);
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) { return x + (-y); }

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
  require_same_field(x, y);
  return FieldElement(x.field_, x.field_->multiply(x.num_, y.num_), x.den_ * y.den_);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("FieldElement: inverse of zero");
  std::vector<Rational> c(num_.begin(), num_.end());
  RatXgcd g = xgcd(RatPoly(std::move(c)), RatPoly(field_->modulus()));
  if (g.g.degree() != 0) throw std::logic_error("FieldElement: modulus not irreducible");
  // s * num == 1 mod f, so x^{-1} = den * s.
  std::vector<Rational> coords(field_->degree());
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = g.s[i] * den_;
  return from_rational_coords(field_, coords);
}

FieldElement FieldElement::scaled(const Rational& c) const {
  IntVector n = num_;
  for (auto& v : n) v *= c.get_num();
  return FieldElement(field_, std::move(n), den_ * c.get_den());
}

FieldElement field_add(const FieldElement& x, const FieldElement& y) { return x + y; }
FieldElement field_mul(const FieldElement& x, const FieldElement& y) { return x * y; }
FieldElement field_inv(const FieldElement& x) { return x.inverse(); }

std::string to_string(const FieldElement& x) {
  std::ostringstream os;
  os << '(' << to_string(IntPoly(x.numerator())) << ')';
  if (x.denominator() != 1) os << '/' << x.denominator();
  return os.str();
}

}  // namespace localconj
