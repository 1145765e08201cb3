#include "localconj/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "localconj/number_theory.hpp"

namespace localconj {

IntPoly::IntPoly(std::vector<Integer> ascending) : c_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
  for (long v : ascending) c_.emplace_back(v);
  trim();
}

IntPoly IntPoly::monomial(std::size_t degree, const Integer& c) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer IntPoly::eval(const Integer& x) const {
  Integer r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

IntPoly IntPoly::derivative() const {
  std::vector<Integer> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
  return IntPoly(std::move(d));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  return g;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> c(std::max(a.coefficients().size(), b.coefficients().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> c(a.coefficients().size() + b.coefficients().size() - 1);
  for (std::size_t i = 0; i < a.coefficients().size(); ++i)
    for (std::size_t j = 0; j < b.coefficients().size(); ++j) c[i + j] += a.coefficients()[i] * b.coefficients()[j];
  return IntPoly(std::move(c));
}

std::string to_string(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    Integer c = f[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i > 0 && c != 1) os << '*';
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) { return os << to_string(f); }

IntPoly parse_poly(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("parse_poly: empty input");
  std::vector<Integer> c;
  auto add = [&](std::size_t deg, const Integer& v) {
    if (c.size() <= deg) c.resize(deg + 1);
    c[deg] += v;
  };
  std::size_t i = 0;
  auto read_digits = [&](std::string& out) {
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) out.push_back(s[i++]);
  };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw std::invalid_argument("parse_poly: expected '+' or '-' in \"" + s + "\"");
    }
    std::string digits;
    read_digits(digits);
    Integer coef = digits.empty() ? Integer(1) : Integer(digits);
    bool has_var = false;
    if (i < s.size() && s[i] == '*') {
      if (digits.empty()) throw std::invalid_argument("parse_poly: dangling '*'");
      ++i;
      if (i >= s.size() || (s[i] != 't' && s[i] != 'x')) throw std::invalid_argument("parse_poly: expected variable");
    }
    std::size_t deg = 0;
    if (i < s.size() && (s[i] == 't' || s[i] == 'x')) {
      has_var = true;
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e;
        read_digits(e);
        if (e.empty()) throw std::invalid_argument("parse_poly: missing exponent");
        deg = std::stoul(e);
      }
    }
    if (digits.empty() && !has_var) throw std::invalid_argument("parse_poly: malformed term in \"" + s + "\"");
    add(deg, sign * coef);
  }
  return IntPoly(std::move(c));
}

RatPoly::RatPoly(std::vector<Rational> ascending) : c_(std::move(ascending)) {
  for (auto& v : c_) v.canonicalize();
  trim();
}

RatPoly::RatPoly(const IntPoly& f) {
  for (const auto& v : f.coefficients()) c_.emplace_back(v);
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return RatPoly(std::move(c));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return RatPoly(std::move(c));
}

RatDivision divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  std::vector<Rational> r = a.coefficients();
  const int db = b.degree();
  std::vector<Rational> q(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
  for (int k = a.degree(); k >= db; --k) {
    Rational f = r[static_cast<std::size_t>(k)] / b.leading();
    if (f == 0) continue;
    q[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b[static_cast<std::size_t>(j)];
  }
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatXgcd xgcd(const RatPoly& a, const RatPoly& b) {
  RatPoly r0 = a, r1 = b, s0({Rational(1)}), s1, t0, t1({Rational(1)});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {s0, t0, r0};
  const RatPoly scale({1 / r0.leading()});
  return {s0 * scale, t0 * scale, r0 * scale};
}

IntPoly charpoly(const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("charpoly: matrix is not square");
  const std::size_t n = a.rows();
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntMatrix m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    Integer tr = (a * m).trace();
    if (mpz_divisible_ui_p(tr.get_mpz_t(), k) == 0) throw std::logic_error("charpoly: inexact division");
    mpz_divexact_ui(tr.get_mpz_t(), tr.get_mpz_t(), k);
    c[n - k] = -tr;
  }
  return IntPoly(std::move(c));
}

namespace {

Rational rat_resultant(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  if (b.degree() == 0) {
    Rational r = 1;
    for (int i = 0; i < a.degree(); ++i) r *= b.leading();
    return r;
  }
  if (a.degree() < b.degree()) {
    Rational r = rat_resultant(b, a);
    return (a.degree() % 2 && b.degree() % 2) ? Rational(-r) : r;
  }
  RatPoly rem = divmod(a, b).remainder;
  if (rem.is_zero()) return 0;
  Rational scale = 1;
  for (int i = 0; i < a.degree() - rem.degree(); ++i) scale *= b.leading();
  if (a.degree() % 2 && b.degree() % 2) scale = -scale;
  return scale * rat_resultant(b, rem);
}

}  // namespace

Integer resultant(const IntPoly& f, const IntPoly& g) {
  Rational r = rat_resultant(RatPoly(f), RatPoly(g));
  r.canonicalize();
  if (r.get_den() != 1) throw std::logic_error("resultant: non-integral result");
  return r.get_num();
}

Integer discriminant(const IntPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("discriminant: constant polynomial");
  const long n = f.degree();
  Integer r = resultant(f, f.derivative());
  if (mpz_divisible_p(r.get_mpz_t(), f.leading().get_mpz_t()) == 0)
    throw std::logic_error("discriminant: inexact division by leading coefficient");
  r /= f.leading();
  return ((n * (n - 1) / 2) % 2) ? Integer(-r) : r;
}

namespace {

// Polynomials over Z/pZ with small p; ascending, trimmed.
using ModPoly = std::vector<long>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long mod_inv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr) {
    long q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return (t % p + p) % p;
}

ModPoly reduce(const IntPoly& f, long p) {
  ModPoly out;
  for (const auto& c : f.coefficients()) out.push_back(mod_floor(c, Integer(p)).get_si());
  trim(out);
  return out;
}

ModPoly rem(ModPoly a, const ModPoly& b, long p) {
  const long inv = mod_inv(b.back(), p);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const long f = a.back() * inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] = ((a[shift + j] - f * b[j]) % p + p) % p;
    trim(a);
  }
  return a;
}

ModPoly quo(ModPoly a, const ModPoly& b, long p) {
  const long inv = mod_inv(b.back(), p);
  if (a.size() < b.size()) return {};
  ModPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size()) {
    const long f = a.back() * inv % p;
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = ((a[shift + j] - f * b[j]) % p + p) % p;
    trim(a);
  }
  trim(q);
  return q;
}

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, long p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return rem(std::move(c), m, p);
}

ModPoly powmod(ModPoly base, unsigned long e, const ModPoly& m, long p) {
  ModPoly r{1};
  r = rem(r, m, p);
  base = rem(base, m, p);
  while (e) {
    if (e & 1) r = mulmod(r, base, m, p);
    base = mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

ModPoly gcd(ModPoly a, ModPoly b, long p) {
  while (!b.empty()) {
    ModPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Degrees of the irreducible factors of a squarefree monic f mod p.
std::vector<int> factor_degrees_mod(const ModPoly& f, long p) {
  std::vector<int> degs;
  ModPoly g = f;
  ModPoly h{0, 1};
  h = rem(h, g, p);
  for (int d = 1; static_cast<int>(g.size()) - 1 >= 2 * d; ++d) {
    h = powmod(h, static_cast<unsigned long>(p), g, p);
    ModPoly hx = h;
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = ((hx[1] - 1) % p + p) % p;
    trim(hx);
    ModPoly c = gcd(g, hx, p);
    const int dc = static_cast<int>(c.size()) - 1;
    if (dc > 0) {
      for (int k = 0; k < dc / d; ++k) degs.push_back(d);
      g = quo(g, c, p);
      h = rem(h, g, p);
    }
  }
  if (g.size() > 1) degs.push_back(static_cast<int>(g.size()) - 1);
  return degs;
}

std::set<int> subset_sums(const std::vector<int>& degs) {
  std::set<int> sums{0};
  for (int d : degs) {
    std::set<int> next = sums;
    for (int s : sums) next.insert(s + d);
    sums = std::move(next);
  }
  return sums;
}

bool divides(const IntPoly& g, const IntPoly& f) {
  return divmod(RatPoly(f), RatPoly(g)).remainder.is_zero();
}

// Kronecker-style search for a monic integer factor of degree d. The
// candidate g is pinned down by its values at d + 1 points, each of which
// must divide the value of f there; Mignotte's bound prunes interpolants.
bool has_factor_of_degree(const IntPoly& f, int d) {
  const int n = f.degree();
  Integer norm2 = 0;
  for (const auto& c : f.coefficients()) norm2 += c * c;
  Integer bound;
  mpz_sqrt(bound.get_mpz_t(), norm2.get_mpz_t());
  bound += 1;

  // Candidate evaluation points with the fewest divisors first.
  std::vector<std::pair<std::size_t, Integer>> pts;
  for (long x = -(n + 6); x <= n + 6; ++x) {
    Integer v = f.eval(x);
    if (v == 0) return true;
    pts.emplace_back(divisors(v).size(), Integer(x));
  }
  std::sort(pts.begin(), pts.end());
  pts.resize(static_cast<std::size_t>(d + 1));

  std::vector<Integer> xs;
  std::vector<std::vector<Integer>> choices;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    xs.push_back(pts[i].second);
    std::vector<Integer> ds = divisors(f.eval(xs.back()));
    std::vector<Integer> signed_ds;
    for (const auto& v : ds) {
      signed_ds.push_back(v);
      if (i > 0) signed_ds.push_back(-v);  // fix the sign of g at the first point
    }
    choices.push_back(std::move(signed_ds));
  }

  std::vector<Integer> ys(xs.size());
  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == xs.size()) {
      // Newton divided differences, expanded into the monomial basis.
      std::vector<Rational> dd(ys.begin(), ys.end());
      for (std::size_t j = 1; j < xs.size(); ++j)
        for (std::size_t i = xs.size() - 1; i >= j; --i)
          dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - j]);
      RatPoly g({dd.back()});
      for (std::size_t i = xs.size() - 1; i-- > 0;)
        g = g * RatPoly({Rational(-xs[i]), Rational(1)}) + RatPoly({dd[i]});
      if (g.degree() != d) return false;
      std::vector<Integer> ic;
      for (int i = 0; i <= d; ++i) {
        Rational c = g[static_cast<std::size_t>(i)];
        if (c.get_den() != 1) return false;
        Integer binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(i));
        if (abs(c.get_num()) > binom * bound) return false;
        ic.push_back(c.get_num());
      }
      if (ic.back() != 1 && ic.back() != -1) return false;
      return divides(IntPoly(std::move(ic)), f);
    }
    for (const auto& y : choices[k]) {
      ys[k] = y;
      if (search(k + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace

bool is_irreducible(const IntPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_irreducible: constant polynomial");
  if (!f.is_monic()) throw std::invalid_argument("is_irreducible: polynomial is not monic");
  const int n = f.degree();
  if (n == 1) return true;

  // Rational roots of a monic polynomial are integers dividing f(0).
  if (f[0] == 0) return false;
  for (const auto& d : divisors(f[0]))
    if (f.eval(d) == 0 || f.eval(-d) == 0) return false;
  if (n <= 3) return true;

  const Integer disc = discriminant(f);
  if (disc == 0) return false;  // repeated factor

  std::set<int> possible;
  for (int k = 1; k <= n / 2; ++k) possible.insert(k);
  for (long p : small_primes_not_dividing(disc, 10)) {
    std::vector<int> degs = factor_degrees_mod(reduce(f, p), p);
    if (degs.size() == 1) return true;
    std::set<int> sums = subset_sums(degs), kept;
    for (int k : possible)
      if (sums.count(k)) kept.insert(k);
    possible = std::move(kept);
    if (possible.empty()) return true;
  }
  for (int d : possible)
    if (has_factor_of_degree(f, d)) return false;
  return true;
}

IntMatrix companion(const IntPoly& f) {
  if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("companion: need a monic nonconstant polynomial");
  const std::size_t n = static_cast<std::size_t>(f.degree());
  IntMatrix c(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) c(i, i + 1) = 1;
  for (std::size_t j = 0; j < n; ++j) c(n - 1, j) = -f[j];
  return c;
}

IntMatrix evaluate(const IntPoly& p, const IntMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("evaluate: matrix is not square");
  const std::size_t n = a.rows();
  IntMatrix r(n, n);
  for (int k = p.degree(); k >= 0; --k) {
    r = r * a;
    for (std::size_t i = 0; i < n; ++i) r(i, i) += p[static_cast<std::size_t>(k)];
  }
  return r;
}

}  // namespace localconj
