#include "sumset/certificate.hpp"

#include <algorithm>

#include "sumset/integer_set.hpp"

namespace sumset {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::verified:
      return "verified";
    case Outcome::refuted:
      return "refuted";
    case Outcome::budget_exhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

int exit_code(Outcome o) {
  switch (o) {
    case Outcome::verified:
      return 0;
    case Outcome::refuted:
      return 1;
    case Outcome::budget_exhausted:
      return 2;
  }
  return 3;
}

void Certificate::finalize(bool truncated) {
  // Literals order as their element lists, not as strings.
  std::vector<IntegerSet> sets;
  for (const auto& c : counterexamples) sets.push_back(parse_set_literal(c, 1 << 20));
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  counterexamples.clear();
  for (const auto& s : sets) counterexamples.push_back(to_literal(s));

  if (!counterexamples.empty()) {
    outcome = Outcome::refuted;
  } else if (truncated) {
    outcome = Outcome::budget_exhausted;
  } else {
    outcome = Outcome::verified;
  }
}

Json Certificate::to_json(bool include_wall_time) const {
  Json j;
  j["schema_version"] = kCertificateSchemaVersion;
  j["query"] = query;
  j["claim"] = claim;
  j["outcome"] = std::string(to_string(outcome));
  j["counterexamples"] = counterexamples;
  j["counts"] = counts;
  j["cap"] = cap;
  j["tool_version"] = std::string(kToolVersion);
  if (include_wall_time) j["wall_time_ms"] = wall_time_ms;
  j["details"] = details;
  return j;
}

std::string Certificate::dump(bool include_wall_time) const { return to_json(include_wall_time).dump(2) + "\n"; }

}  // namespace sumset
