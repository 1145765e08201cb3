#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "localconj/bridge.hpp"
#include "localconj/errors.hpp"
#include "localconj/exact_linalg.hpp"
#include "localconj/generator.hpp"
#include "localconj/number_theory.hpp"

namespace localconj::cli {

namespace {

Integer parse_integer_token(std::string_view tok) {
  std::string s(tok);
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  const std::size_t digits_from = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == digits_from || s.find_first_not_of("0123456789", digits_from) != std::string::npos)
    throw ParseError("not an integer: '" + std::string(tok) + "'");
  return Integer(s, 10);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

IntMatrix parse_matrix_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON matrix: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows")) throw ParseError("JSON matrix needs a \"rows\" array");
  IntMatrix m = matrix_from_json(j.at("rows"));
  if (j.contains("n")) {
    const Integer n = integer_from_json(j.at("n"));
    if (n != static_cast<unsigned long>(m.rows())) throw ParseError("JSON matrix: \"n\" disagrees with \"rows\"");
  }
  return m;
}

IntMatrix parse_matrix_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  if (!(in >> tok)) throw ParseError("empty matrix file");
  const Integer n = parse_integer_token(tok);
  if (n < 1 || n > 64) throw ParseError("matrix dimension out of range: " + n.get_str());
  const std::size_t dim = n.get_ui();
  IntMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if (!(in >> tok)) throw ParseError("matrix file ends early");
      m(i, j) = parse_integer_token(tok);
    }
  if (in >> tok) throw ParseError("trailing data after matrix: '" + tok + "'");
  return m;
}

Integer parse_prime_option(const std::string& s) { return parse_integer_token(s); }

IntPoly parse_field(const std::string& s) {
  try {
    return parse_poly(s);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json inputs_json(const IntMatrix& a, const IntMatrix& b) {
  return json{{"a", matrix_file_json(a)}, {"b", matrix_file_json(b)}, {"sha256", inputs_digest(a, b)}};
}

IdealLattice ideal_from_json(const FieldPtr& k, const json& j) {
  return IdealLattice::from_integer_rows(k, matrix_from_json(j.at("basis")), integer_from_json(j.at("denominator")));
}

json primes_json(const std::vector<Integer>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(integer_to_json(p));
  return out;
}

VerifyResult reject(std::string why) { return {false, std::move(why)}; }

// One per-prime verdict object against a, b.
VerifyResult verify_local(const IntMatrix& a, const IntMatrix& b, const json& v) {
  const Integer p = integer_from_json(v.at("prime"));
  if (!is_prime(p)) return reject(p.get_str() + " is not prime");
  if (integer_from_json(v.at("mu")) != mu(SylvesterOperator(a, b), p)) return reject("p=" + p.get_str() + ": mu differs");
  const bool claimed = v.at("conjugate").get<bool>();
  if (claimed) {
    const Certificate c = certificate_from_json(v.at("certificate"));
    const auto* cert = std::get_if<UnitModCert>(&c);
    if (!cert || cert->prime != p) return reject("p=" + p.get_str() + ": missing or mismatched certificate");
    if (!verify_cert(a, b, c)) return reject("p=" + p.get_str() + ": certificate does not verify");
    return {true, ""};
  }
  if (!v.at("certificate").is_null()) return reject("p=" + p.get_str() + ": false verdict carries a certificate");
  if (conjugate_over_Zp(a, b, p).conjugate) return reject("p=" + p.get_str() + ": recomputation finds a conjugator");
  return {true, ""};
}

VerifyResult verify_conj_all(const IntMatrix& a, const IntMatrix& b, const json& v) {
  const IntPoly f = common_charpoly(a, b);
  const std::vector<Integer> screened = screen_primes(f);
  if (!(v.at("screened_primes") == primes_json(screened))) return reject("screened prime list differs");
  const json& per = v.at("per_prime");
  if (per.size() != screened.size()) return reject("per-prime verdict count differs");
  bool all = true;
  std::optional<Integer> first_fail;
  Integer max_mu = 0;
  for (std::size_t i = 0; i < per.size(); ++i) {
    if (integer_from_json(per[i].at("prime")) != screened[i]) return reject("per-prime verdicts out of order");
    VerifyResult r = verify_local(a, b, per[i]);
    if (!r.accepted) return r;
    max_mu = std::max(max_mu, integer_from_json(per[i].at("mu")));
    if (!per[i].at("conjugate").get<bool>()) {
      all = false;
      if (!first_fail) first_fail = screened[i];
    }
  }
  if (!v.at("prime").is_null()) return reject("all-prime verdict names a prime");
  if (integer_from_json(v.at("mu")) != max_mu) return reject("mu is not the per-prime maximum");
  if (v.at("conjugate").get<bool>() != all) return reject("overall verdict disagrees with per-prime verdicts");
  const json expected_fail = first_fail ? integer_to_json(*first_fail) : json(nullptr);
  if (!(v.at("failing_prime") == expected_fail)) return reject("failing prime differs");
  const Certificate c = certificate_from_json(v.at("certificate"));
  if (!std::holds_alternative<std::monostate>(c)) {
    if (!all) return reject("false verdict carries a certificate");
    if (!verify_cert(a, b, c)) return reject("global certificate does not verify");
  }
  return {true, ""};
}

VerifyResult verify_weak(const IntMatrix& a, const IntMatrix& b, const json& report) {
  common_charpoly(a, b);
  const IdealLattice ia = ideal_of_matrix(a);
  const IdealLattice ib = ideal_of_matrix(b);
  const FieldPtr& k = ia.field();
  if (!(ideal_from_json(k, report.at("ideal_a")) == ia)) return reject("I_A differs");
  if (!(ideal_from_json(k, report.at("ideal_b")) == ib)) return reject("I_B differs");
  const json& v = report.at("verdict");
  const IdealLattice x = ideal_from_json(k, v.at("x"));
  const IdealLattice y = ideal_from_json(k, v.at("y"));
  if (!(x == quotient(ia, ib))) return reject("witness X is not (I_A : I_B)");
  if (!(y == quotient(ib, ia))) return reject("witness Y is not (I_B : I_A)");
  const bool eq = mul(x, y).contains(FieldElement::one(k));
  if (eq != v.at("weakly_equivalent").get<bool>()) return reject("membership of 1 in X Y differs");
  return {true, ""};
}

void render_into(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [key, value] : j.items()) render_into(value, prefix.empty() ? key : prefix + "." + key, os);
    return;
  }
  if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) render_into(j[i], prefix + "[" + std::to_string(i) + "]", os);
    return;
  }
  os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

IntMatrix parse_matrix(std::string_view text) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty matrix input");
  return text[first] == '{' ? parse_matrix_json(text) : parse_matrix_text(text);
}

IntMatrix read_matrix_file(const std::string& path) { return parse_matrix(read_file(path)); }

json integer_to_json(const Integer& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()), 10);
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()), 10);
  if (j.is_string()) return parse_integer_token(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix rows must be a nonempty array");
  const std::size_t n = j.size();
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n) throw ParseError("matrix must be square");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = integer_from_json(j[i][k]);
  }
  return m;
}

json matrix_file_json(const IntMatrix& m) { return json{{"n", m.rows()}, {"rows", matrix_to_json(m)}}; }

json certificate_to_json(const Certificate& c) {
  return std::visit(
      [](const auto& cert) -> json {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, UnitModCert>) {
          return json{{"type", "unit_mod"},
                      {"prime", integer_to_json(cert.prime)},
                      {"mu", cert.mu},
                      {"modulus", integer_to_json(cert.modulus)},
                      {"x", matrix_to_json(cert.x)}};
        } else if constexpr (std::is_same_v<T, IntegerPairCert>) {
          return json{{"type", "integer_pair"}, {"q", matrix_to_json(cert.q)}, {"s", matrix_to_json(cert.s)}};
        } else {
          return json{{"type", "global"}, {"p", matrix_to_json(cert.p_matrix)}};
        }
      },
      c);
}

Certificate certificate_from_json(const json& j) {
  if (j.is_null()) return std::monostate{};
  const std::string type = j.at("type").get<std::string>();
  if (type == "unit_mod") {
    const Integer mu = integer_from_json(j.at("mu"));
    if (mu < 0 || !mu.fits_uint_p()) throw ParseError("certificate mu out of range");
    return UnitModCert{matrix_from_json(j.at("x")), integer_from_json(j.at("prime")),
                       static_cast<unsigned>(mu.get_ui()), integer_from_json(j.at("modulus"))};
  }
  if (type == "integer_pair") return IntegerPairCert{matrix_from_json(j.at("q")), matrix_from_json(j.at("s"))};
  if (type == "global") return GlobalCert{matrix_from_json(j.at("p"))};
  throw ParseError("unknown certificate type '" + type + "'");
}

json verdict_to_json(const Verdict& v) {
  json out{{"conjugate", v.conjugate},
           {"prime", v.prime ? integer_to_json(*v.prime) : json(nullptr)},
           {"mu", v.mu_used},
           {"certificate", certificate_to_json(v.certificate)}};
  if (!v.prime) {
    out["screened_primes"] = primes_json(v.screened_primes);
    out["failing_prime"] = v.failing_prime ? integer_to_json(*v.failing_prime) : json(nullptr);
    json per = json::array();
    for (const auto& local : v.per_prime) per.push_back(verdict_to_json(local));
    out["per_prime"] = std::move(per);
  }
  return out;
}

json ideal_to_json(const IdealLattice& i) {
  return json{{"denominator", integer_to_json(i.denominator())}, {"basis", matrix_to_json(i.basis())}};
}

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("SHA-256 digest failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

json sealed(json report) {
  report["seal"] = report_seal(report);
  return report;
}

}  // namespace

std::string inputs_digest(const IntMatrix& a, const IntMatrix& b) {
  std::ostringstream canon;
  for (const IntMatrix* m : {&a, &b}) {
    canon << m->rows() << '\n';
    for (std::size_t i = 0; i < m->rows(); ++i) {
      for (std::size_t j = 0; j < m->cols(); ++j) canon << (j ? " " : "") << (*m)(i, j).get_str();
      canon << '\n';
    }
  }
  return sha256_hex(canon.str());
}

std::string report_seal(const json& report) {
  std::string data = report.at("command").get<std::string>() + '\n' + report.at("inputs").at("sha256").get<std::string>() + '\n';
  for (const char* key : {"ideal_a", "ideal_b", "verdict"})
    if (report.contains(key)) data += report.at(key).dump() + '\n';
  return sha256_hex(data);
}

json report_conj_p(const IntMatrix& a, const IntMatrix& b, const Integer& p) {
  const IntPoly f = common_charpoly(a, b);
  return sealed(json{{"command", "conj-p"},
                     {"inputs", inputs_json(a, b)},
                     {"charpoly", to_string(f)},
                     {"verdict", verdict_to_json(conjugate_over_Zp(a, b, p))}});
}

json report_conj_all(const IntMatrix& a, const IntMatrix& b, const std::optional<IntMatrix>& conjugator,
                     bool cross_check) {
  const IntPoly f = common_charpoly(a, b);
  const Verdict v = conjugate_over_all_Zp(a, b, conjugator);
  json out{{"command", "conj-all"},
           {"inputs", inputs_json(a, b)},
           {"charpoly", to_string(f)},
           {"verdict", verdict_to_json(v)}};
  if (cross_check) {
    const bool weak = weakly_equivalent(ideal_of_matrix(a), ideal_of_matrix(b));
    out["cross_check"] = json{{"matrix_side", v.conjugate}, {"ideal_side", weak}, {"agree", weak == v.conjugate}};
  }
  return sealed(std::move(out));
}

json report_weak_equiv(const IntMatrix& a, const IntMatrix& b) {
  const IntPoly f = common_charpoly(a, b);
  const IdealLattice ia = ideal_of_matrix(a);
  const IdealLattice ib = ideal_of_matrix(b);
  const WeakEquivalence w = weak_equivalence(ia, ib);
  return sealed(json{{"command", "weak-equiv"},
                     {"inputs", inputs_json(a, b)},
                     {"charpoly", to_string(f)},
                     {"ideal_a", ideal_to_json(ia)},
                     {"ideal_b", ideal_to_json(ib)},
                     {"verdict", json{{"weakly_equivalent", w.equivalent}, {"x", ideal_to_json(w.x)}, {"y", ideal_to_json(w.y)}}}});
}

VerifyResult verify_report(const json& report) {
  try {
    const std::string command = report.at("command").get<std::string>();
    const json& inputs = report.at("inputs");
    const IntMatrix a = matrix_from_json(inputs.at("a").at("rows"));
    const IntMatrix b = matrix_from_json(inputs.at("b").at("rows"));
    if (inputs.at("sha256").get<std::string>() != inputs_digest(a, b)) return reject("inputs digest mismatch");
    if (report.at("seal").get<std::string>() != report_seal(report)) return reject("seal mismatch");
    if (command == "conj-p") {
      common_charpoly(a, b);
      return verify_local(a, b, report.at("verdict"));
    }
    if (command == "conj-all") return verify_conj_all(a, b, report.at("verdict"));
    if (command == "weak-equiv") return verify_weak(a, b, report);
    return reject("cannot verify command '" + command + "'");
  } catch (const std::exception& e) {
    return reject(std::string("malformed or inconsistent report: ") + e.what());
  }
}

std::string render_text(const json& doc) {
  std::ostringstream os;
  render_into(doc, "", os);
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact similarity of integer matrices over the p-adic integers", "localconj"};
  app.require_subcommand(1);
  std::string format = "json";
  std::string file_a, file_b, report_file, prime_text, conjugator_file, field_text, strategy_text = "random";
  std::string out_a, out_b, out_conjugator;
  std::uint64_t seed = 0;
  bool cross_check = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  auto add_file = [&](CLI::App* sub, std::string& target, const char* name) {
    sub->add_option(name, target, "Matrix file (text or JSON)")->required();
  };

  std::function<json()> action;
  auto timed = [](const std::function<json()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    json r = fn();
    r["timing"] = json{{"elapsed_ms", elapsed_ms(start)}};
    return r;
  };

  auto* charpoly_cmd = app.add_subcommand("charpoly", "Characteristic polynomial of a matrix");
  add_file(charpoly_cmd, file_a, "matrix");
  add_format(charpoly_cmd);
  charpoly_cmd->callback([&] {
    action = [&] {
      const IntMatrix a = read_matrix_file(file_a);
      const IntPoly f = charpoly(a);
      json coeffs = json::array();
      for (const auto& c : f.coefficients()) coeffs.push_back(integer_to_json(c));
      return json{{"command", "charpoly"},
                  {"charpoly", to_string(f)},
                  {"coefficients", coeffs},
                  {"irreducible", is_irreducible(f)}};
    };
  });

  auto* conj_p_cmd = app.add_subcommand("conj-p", "Decide similarity over Z_p for one prime");
  add_file(conj_p_cmd, file_a, "a");
  add_file(conj_p_cmd, file_b, "b");
  conj_p_cmd->add_option("--prime,-p", prime_text, "The prime p")->required();
  add_format(conj_p_cmd);
  conj_p_cmd->callback([&] {
    action = [&] {
      const IntMatrix a = read_matrix_file(file_a), b = read_matrix_file(file_b);
      const Integer p = parse_prime_option(prime_text);
      return timed([&] { return report_conj_p(a, b, p); });
    };
  });

  auto* conj_all_cmd = app.add_subcommand("conj-all", "Decide similarity over Z_p for every prime");
  add_file(conj_all_cmd, file_a, "a");
  add_file(conj_all_cmd, file_b, "b");
  conj_all_cmd->add_option("--conjugator", conjugator_file, "Candidate P in GL_n(Z) with a P = P b");
  conj_all_cmd->add_flag("--cross-check", cross_check, "Also decide weak equivalence of I_A and I_B");
  add_format(conj_all_cmd);
  conj_all_cmd->callback([&] {
    action = [&] {
      const IntMatrix a = read_matrix_file(file_a), b = read_matrix_file(file_b);
      std::optional<IntMatrix> p;
      if (!conjugator_file.empty()) p = read_matrix_file(conjugator_file);
      return timed([&] { return report_conj_all(a, b, p, cross_check); });
    };
  });

  auto* weak_cmd = app.add_subcommand("weak-equiv", "Decide weak equivalence of I_A and I_B");
  add_file(weak_cmd, file_a, "a");
  add_file(weak_cmd, file_b, "b");
  add_format(weak_cmd);
  weak_cmd->callback([&] {
    action = [&] {
      const IntMatrix a = read_matrix_file(file_a), b = read_matrix_file(file_b);
      return timed([&] { return report_weak_equiv(a, b); });
    };
  });

  auto* ideal_cmd = app.add_subcommand("ideal-of", "The ideal I_A spanned by the beta-eigenvector");
  add_file(ideal_cmd, file_a, "matrix");
  add_format(ideal_cmd);
  ideal_cmd->callback([&] {
    action = [&] {
      const IntMatrix a = read_matrix_file(file_a);
      const EigenData e = eigenvector(a);
      const IdealLattice i = IdealLattice::from_generators(e.field, lattice_generators(e));
      json u = json::array();
      for (const auto& x : e.u) u.push_back(to_string(x));
      const Order r = coeff_ring(i);
      return json{{"command", "ideal-of"},
                  {"charpoly", to_string(e.field->modulus())},
                  {"eigenvector", u},
                  {"scale", e.scale.get_str()},
                  {"ideal", ideal_to_json(i)},
                  {"coefficient_ring", ideal_to_json(r.lattice())},
                  {"invertible", is_invertible(i, r)}};
    };
  });

  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form a = s d t");
  add_file(snf_cmd, file_a, "matrix");
  add_format(snf_cmd);
  snf_cmd->callback([&] {
    action = [&] {
      const SNFDecomposition dec = snf(read_matrix_file(file_a));
      json diag = json::array();
      for (std::size_t i = 0; i < dec.diagonal_length(); ++i) diag.push_back(integer_to_json(dec.diagonal(i)));
      return json{{"command", "snf"},
                  {"diagonal", diag},
                  {"rank", dec.rank},
                  {"s", matrix_to_json(dec.s)},
                  {"d", matrix_to_json(dec.d)},
                  {"t", matrix_to_json(dec.t)}};
    };
  });

  auto* screen_cmd = app.add_subcommand("screen-primes", "Primes whose square divides disc(f)");
  screen_cmd->add_option("matrix", file_a, "Matrix file; its characteristic polynomial is used");
  screen_cmd->add_option("--field", field_text, "Polynomial f, e.g. \"t^2+3\"");
  add_format(screen_cmd);
  screen_cmd->callback([&] {
    action = [&] {
      if (file_a.empty() == field_text.empty()) throw ParseError("screen-primes takes exactly one of a matrix file or --field");
      const IntPoly f = field_text.empty() ? charpoly(read_matrix_file(file_a)) : parse_field(field_text);
      if (f.degree() < 1) throw PreconditionError("screen-primes: polynomial must be nonconstant");
      return json{{"command", "screen-primes"},
                  {"field", to_string(f)},
                  {"discriminant", integer_to_json(discriminant(f))},
                  {"screened_primes", primes_json(screen_primes(f))}};
    };
  });

  auto* ell_cmd = app.add_subcommand("ell", "ell invariant of a 2x2 matrix at p");
  add_file(ell_cmd, file_a, "matrix");
  ell_cmd->add_option("--prime,-p", prime_text, "The prime p")->required();
  add_format(ell_cmd);
  ell_cmd->callback([&] {
    action = [&] {
      const IntMatrix a = read_matrix_file(file_a);
      const EllInvariant e = ell_invariant(a, parse_prime_option(prime_text));
      return json{{"command", "ell"}, {"prime", integer_to_json(e.prime)}, {"ell", e.ell}};
    };
  });

  auto* companion_cmd = app.add_subcommand("companion-test", "Is a similar to companion(f) over Z_p");
  add_file(companion_cmd, file_a, "matrix");
  companion_cmd->add_option("--prime,-p", prime_text, "The prime p")->required();
  add_format(companion_cmd);
  companion_cmd->callback([&] {
    action = [&] {
      const IntMatrix a = read_matrix_file(file_a);
      const Integer p = parse_prime_option(prime_text);
      return json{{"command", "companion-test"}, {"prime", integer_to_json(p)}, {"companion", companion_test(a, p)}};
    };
  });

  auto* gen_cmd = app.add_subcommand("gen", "Generate a same-charpoly pair");
  gen_cmd->add_option("--field", field_text, "Monic irreducible f, e.g. \"t^2+3\"")->required();
  gen_cmd->add_option("--strategy", strategy_text, "unimodular | singular:<p> | random");
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("--out-a", out_a, "Write a as a matrix file");
  gen_cmd->add_option("--out-b", out_b, "Write b as a matrix file");
  gen_cmd->add_option("--out-conjugator", out_conjugator, "Write the conjugator, when known");
  add_format(gen_cmd);
  gen_cmd->callback([&] {
    action = [&] {
      const IntPoly f = parse_field(field_text);
      Strategy s;
      try {
        s = Strategy::parse(strategy_text);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
      const GeneratedPair g = generate_pair(f, s, seed);
      if (!out_a.empty()) write_file(out_a, matrix_file_json(g.a).dump(2) + "\n");
      if (!out_b.empty()) write_file(out_b, matrix_file_json(g.b).dump(2) + "\n");
      if (!out_conjugator.empty() && g.conjugator)
        write_file(out_conjugator, matrix_file_json(*g.conjugator).dump(2) + "\n");
      return json{{"command", "gen"},
                  {"field", to_string(f)},
                  {"strategy", s.to_string()},
                  {"resolved_strategy", g.strategy},
                  {"seed", seed},
                  {"a", matrix_file_json(g.a)},
                  {"b", matrix_file_json(g.b)},
                  {"conjugator", g.conjugator ? matrix_to_json(*g.conjugator) : json(nullptr)}};
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "Re-check a conj-p, conj-all or weak-equiv report");
  verify_cmd->add_option("report", report_file, "Report JSON file")->required();
  add_format(verify_cmd);
  verify_cmd->callback([&] {
    action = [&] {
      json report;
      try {
        report = json::parse(read_file(report_file));
      } catch (const json::exception& e) {
        throw ParseError(std::string("invalid report JSON: ") + e.what());
      }
      const VerifyResult r = verify_report(report);
      json doc{{"command", "verify"}, {"accepted", r.accepted}};
      if (report.is_object() && report.contains("command")) doc["verified_command"] = report["command"];
      doc["reason"] = r.reason.empty() ? json(nullptr) : json(r.reason);
      return doc;
    };
  });

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const json doc = action();
    if (format == "text")
      out << render_text(doc);
    else
      out << doc.dump(2) << '\n';
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "precondition: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 3;
  }
}

}  // namespace localconj::cli
