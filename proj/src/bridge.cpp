#include "localconj/bridge.hpp"

#include <optional>
#include <stdexcept>

#include "localconj/errors.hpp"

namespace localconj {

EigenData eigenvector(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("eigenvector: matrix is not square");
  const std::size_t n = a.rows();
  if (n < 2) throw PreconditionError("eigenvector: dimension must be at least 2");
  const IntPoly f = charpoly(a);
  if (!is_irreducible(f)) throw PreconditionError("eigenvector: characteristic polynomial is reducible");
  const FieldPtr k = NumberField::make(f);

  // Row-reduce A - beta I over K.
  std::vector<std::vector<FieldElement>> m;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FieldElement> row;
    for (std::size_t j = 0; j < n; ++j) {
      FieldElement e = FieldElement::integer(k, a(i, j));
      if (i == j) e = e - FieldElement::beta(k);
      row.push_back(std::move(e));
    }
    m.push_back(std::move(row));
  }
  std::vector<std::optional<std::size_t>> pivot_row(n);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < n; ++c) {
    std::size_t p = r;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) continue;
    std::swap(m[p], m[r]);
    const FieldElement inv = m[r][c].inverse();
    for (auto& x : m[r]) x = x * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const FieldElement factor = m[i][c];
      for (std::size_t j = 0; j < n; ++j) m[i][j] = m[i][j] - factor * m[r][j];
    }
    pivot_row[c] = r++;
  }
  if (r != n - 1) throw std::logic_error("eigenvector: eigenspace is not one-dimensional");

  std::size_t free_col = 0;
  while (pivot_row[free_col]) ++free_col;
  std::vector<FieldElement> u(n, FieldElement::zero(k));
  u[free_col] = FieldElement::one(k);
  for (std::size_t c = 0; c < n; ++c)
    if (pivot_row[c]) u[c] = -m[*pivot_row[c]][free_col];

  std::size_t first = 0;
  while (u[first].is_zero()) ++first;
  const FieldElement lead_inv = u[first].inverse();
  for (auto& x : u) x = x * lead_inv;

  // Clear denominators, then strip the content.
  Integer den = 1;
  for (const auto& x : u) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.denominator().get_mpz_t());
  Integer content = 0;
  for (const auto& x : u)
    for (const auto& c : x.numerator()) {
      const Integer v = c * (den / x.denominator());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    }
  Rational scale(den, content);
  scale.canonicalize();
  return EigenData{k, std::move(u), scale};
}

std::vector<FieldElement> lattice_generators(const EigenData& e) {
  std::vector<FieldElement> out;
  for (const auto& x : e.u) out.push_back(x.scaled(e.scale));
  return out;
}

IdealLattice ideal_of_matrix(const IntMatrix& a) {
  const EigenData e = eigenvector(a);
  return IdealLattice::from_generators(e.field, lattice_generators(e));
}

bool verify_multiplication_rep(const IntMatrix& a, const IdealLattice& i, const EigenData& e) {
  const std::size_t n = e.u.size();
  if (!a.is_square() || a.rows() != n || i.degree() != n) return false;
  if (!(e.field->modulus() == i.field()->modulus())) return false;
  if (!(IdealLattice::from_generators(i.field(), lattice_generators(e)) == i)) return false;
  const FieldElement beta = FieldElement::beta(e.field);
  for (std::size_t r = 0; r < n; ++r) {
    FieldElement acc = FieldElement::zero(e.field);
    for (std::size_t c = 0; c < n; ++c)
      if (a(r, c) != 0) acc = acc + FieldElement::integer(e.field, a(r, c)) * e.u[c];
    if (!(acc == beta * e.u[r])) return false;
  }
  return true;
}

}  // namespace localconj
