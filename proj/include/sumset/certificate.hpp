// certificate.hpp
//
// The JSON record written by every verification run.
#ifndef SUMSET_CERTIFICATE_HPP
#define SUMSET_CERTIFICATE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace sumset {

using Json = nlohmann::ordered_json;

inline constexpr int kCertificateSchemaVersion = 1;
inline constexpr std::string_view kToolVersion = SUMSET_VERSION;

enum class Outcome { verified, refuted, budget_exhausted };
std::string_view to_string(Outcome o);
/// 0 verified, 1 refuted, 2 budget exhausted.
int exit_code(Outcome o);

struct Certificate {
  Json query = Json::object();
  std::string claim;
  Outcome outcome = Outcome::verified;
  std::vector<std::string> counterexamples;  // set literals
  Json counts = Json::object();
  Json cap = nullptr;
  std::int64_t wall_time_ms = 0;
  /// Claim-specific findings that are not refutations (out-of-hypothesis
  /// observations, per-k breakdowns, which reading of a statement held).
  Json details = Json::object();

  /// Sorts and deduplicates the counterexamples, then sets the outcome:
  /// refuted iff counterexamples exist, else budget_exhausted if `truncated`, else verified.
  void finalize(bool truncated);

  Json to_json(bool include_wall_time = true) const;
  /// Two-space indented dump with a trailing newline.
  std::string dump(bool include_wall_time = true) const;
};

}  // namespace sumset

#endif  // SUMSET_CERTIFICATE_HPP
