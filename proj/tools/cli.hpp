#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "localconj/ideal.hpp"
#include "localconj/local_conj.hpp"

namespace localconj::cli {

using json = nlohmann::ordered_json;

/// Malformed input or unreadable file; maps to exit code 1.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Square matrix in either accepted format, detected from the first
/// non-blank character: '{' selects JSON {"n": .., "rows": [[..]]}, anything
/// else the text form (n, then n rows of n integers).
IntMatrix parse_matrix(std::string_view text);
IntMatrix read_matrix_file(const std::string& path);

/// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
json integer_to_json(const Integer& v);
Integer integer_from_json(const json& j);
json matrix_to_json(const IntMatrix& m);  // row-major array of rows
IntMatrix matrix_from_json(const json& j);
/// {"n": .., "rows": ..}
json matrix_file_json(const IntMatrix& m);

json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);
json verdict_to_json(const Verdict& v);
json ideal_to_json(const IdealLattice& i);

/// Hex SHA-256 of the canonical serialization of the inputs.
std::string inputs_digest(const IntMatrix& a, const IntMatrix& b);

/// Hex SHA-256 binding the command, the inputs digest and the verdict (with the
/// ideals for weak-equiv). Reports carry it under "seal".
std::string report_seal(const json& report);

json report_conj_p(const IntMatrix& a, const IntMatrix& b, const Integer& p);
json report_conj_all(const IntMatrix& a, const IntMatrix& b, const std::optional<IntMatrix>& conjugator,
                     bool cross_check);
json report_weak_equiv(const IntMatrix& a, const IntMatrix& b);

struct VerifyResult {
  bool accepted = false;
  std::string reason;
};

/// Re-checks a report produced by conj-p, conj-all or weak-equiv. The seal must
/// match; then true verdicts are accepted iff their certificates verify and
/// false verdicts iff recomputation reproduces them.
VerifyResult verify_report(const json& report);

/// Flattened "key: value" rendering used by --format text.
std::string render_text(const json& doc);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace localconj::cli
