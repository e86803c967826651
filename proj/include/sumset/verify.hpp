// verify.hpp
//
// Exhaustive desk-scale checks of the 3k-7 bounds and their structure lemmas.
// Each run enumerates a bounded domain, evaluates the claim on every set, and
// returns a Certificate stating the domain (including any cap on a_{k-1}) and
// the outcome.
#ifndef SUMSET_VERIFY_HPP
#define SUMSET_VERIFY_HPP

#include <optional>
#include <vector>

#include "sumset/certificate.hpp"
#include "sumset/enumerate.hpp"

namespace sumset {

struct RunOptions {
  int jobs = 1;
  std::uint64_t budget = kDefaultBudget;  // per enumeration query
  /// Absolute upper limit on a_{k-1} where a claim quantifies over all a_{k-1} >= 2k-2.
  /// Unset means 2k+6 for each k.
  std::optional<int> cap;
  /// Largest k accepted by verify_theorem3.
  int desk_limit = 12;
};

/// |2^A| >= bound_freiman_lev(k, l) for 3 <= k <= k_max, k-1 <= l <= l_max. Failures
/// with k <= 7 are outside the conjecture's range and are reported under
/// details.below_threshold_exceptions, not as counterexamples.
Certificate verify_conjecture(int k_max, int l_max, const RunOptions& opt = {});

/// All normalized k-sets with maximum l and |2^A| = 3k-7, sorted. Requires k >= 4.
/// Throws when the budget runs out.
std::vector<NormalizedSet> classify_extremal(int k, int l, const RunOptions& opt = {},
                                             EnumerationStats* stats = nullptr);

/// For each k, classify_extremal(k, 2k-3) against theorem3_union(k). Extremal sets
/// missing from the families are counterexamples unless they extend a flagged
/// catalog entry by one element (details.explained_by_flagged).
Certificate verify_theorem3(int k_min, int k_max, const RunOptions& opt = {});

/// Over a_i < 2i (i <= k-2), 2k-2 <= a_{k-1} <= cap: |2^A| >= 3k-7, with equality
/// exactly at gen_theorem2(k) when k >= 6 and k = 0, 1 mod 3, and never otherwise.
/// Remark 2.1's shape formula is checked on every equality set.
Certificate verify_theorem2(int k_min, int k_max, const RunOptions& opt = {});

/// Over a_{k-2} < 2k-4, 2k-2 <= a_{k-1} <= cap: |2^A| >= 3k-7.
Certificate verify_theorem1(int k_min, int k_max, const RunOptions& opt = {});

/// Runs the structure checkers over enumerated sets, in four stages:
///   section2:  growth-hypothesis sets, k >= 3 (Lemmas 2.1-2.7, Proposition P4)
///   witness:   all sets with l <= 2k-3, k >= 5 (|W| <= 2)
///   extremal:  sets with l = 2k-3 and |2^A| = 3k-7, k >= 4 (remarks r1, r2; for k >= 5
///              the two-witness decomposition, |U| = (m-1)/2 and the paired residues)
///   split:     the Theorem 1 domain, k >= 4 (overlap identity and count inequality)
/// Violations are listed in details.violations and their sets are the counterexamples.
Certificate sweep_lemmas(int k_min, int k_max, const RunOptions& opt = {});

}  // namespace sumset

#endif  // SUMSET_VERIFY_HPP
