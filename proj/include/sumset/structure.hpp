// structure.hpp
//
// Analyzers for the combinatorial structure behind the 3k-7 bounds:
//
//  * the exceptional set B = [1, 2k-4] \ 2^A' and its properties, for sets obeying
//    the growth hypotheses a_i < 2i (1 <= i <= k-2), a_{k-1} >= 2k-2;
//  * the witness set W of values w with w, w + a_{k-1} both missing from 2^A;
//  * the residue-class decomposition of A built from two witnesses;
//  * the split of A into a low part A1 and a high part A2 at an index s with
//    a_{s-1} = 2s-2, a_s = 2s-1.
//
// Each checker tests the conclusion of a lemma on one concrete set; sweeps over
// enumerated sets live in verify.hpp.
#ifndef SUMSET_STRUCTURE_HPP
#define SUMSET_STRUCTURE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sumset/integer_set.hpp"

namespace sumset {

/// a_i < 2i for 1 <= i <= k-2, a_{k-1} >= 2k-2, k >= 3 (gcd 1 is part of NormalizedSet).
bool satisfies_growth_hypotheses(const NormalizedSet& a);

struct ExceptionalProfile {
  IntegerSet b_list;  // B = {b_1 < ... < b_m}
  int m = 0;
  static constexpr int b0 = 0;  // sentinel only
  IntegerSet D;  // d in [1, b_{m-1}] with 2k-4+d in 2^A'   (m >= 2)
  IntegerSet C;  // the complement of D in [1, b_{m-1}]    (m >= 2)

  /// b_i for 0 <= i <= m, with b_0 = 0.
  int b(int i) const { return i == 0 ? b0 : b_list[static_cast<std::size_t>(i - 1)]; }
};

ExceptionalProfile exceptional_profile(const NormalizedSet& a);

/// [0, 2k-4] is contained in 2A'. Requires the growth hypotheses.
bool check_L2_1(const NormalizedSet& a);

struct LemmaViolation {
  std::string clause;  // "i", "ii", "iii", "iv"
  int b = 0;
  std::string detail;
};

/// For every b in B: (i) b not in A', b even, b/2 in A'; (ii) |[0,b] n A'| = b/2 + 1 and
/// |{i, b-i} n A'| = 1 for 0 <= i <= b/2; (iv) b < 2k-4 implies a_{b/2+1} = b + 1.
/// Empty result means all hold. Throws when the growth hypotheses fail.
std::vector<LemmaViolation> check_L2_2(const NormalizedSet& a);

struct ClauseIiiResult {
  std::vector<LemmaViolation> violations;         // b < k-2, as stated
  std::vector<LemmaViolation> out_of_hypothesis;  // b >= k-2 applications that fail
  int applications = 0;
  int out_of_hypothesis_applications = 0;
};

/// Clause (iii): for b in B with b < k-2 and 1 <= u <= b with 2k-4+u not in 2^A',
/// |[b+1, 2k-5+u-b] n A'| = k-2+floor(u/2)-b and |{i, 2k-4+u-i} n A'| = 1 for
/// b+1 <= i <= k-2+floor(u/2). Also evaluates b in B \ {b_m} with b >= k-2 and logs
/// those failures separately.
ClauseIiiResult check_L2_2_iii(const NormalizedSet& a);

/// b_{i+1} >= 2 b_i + 2 for 0 <= i <= m-1. Throws when the growth hypotheses fail.
bool check_L2_3(const NormalizedSet& a);

struct GapPatterns {
  bool has_consecutive = false;
  bool has_diff2 = false;
  bool has_diff3 = false;
  int window_lo = 0;  // 2k-3
  int window_hi = 0;  // 2k-4+b_{m-1}
  IntegerSet missing;  // window \ 2^A'
};

/// Examines M = [2k-3, 2k-4+b_{m-1}] \ 2^A'. Throws "window undefined" when m < 2.
GapPatterns gap_patterns(const NormalizedSet& a);

/// m = 2 and [0, b_2] n A' = [0, b_1/2] u [b_1+1, 3b_1/2+1]: the one configuration
/// allowed to leave two consecutive integers in the window.
bool matches_consecutive_exception(const NormalizedSet& a);

/// m = 3, b_1 = 2 and [0, b_3] n A' equal to one of six explicit residue-class
/// structures determined by b_2: the configurations allowed to leave two integers
/// at distance 3 in the window. Returns the case number 1..6.
std::optional<int> matches_diff3_exception(const NormalizedSet& a);

struct DCountCheck {
  int b = 0;  // b_{m-1}
  int d_count = 0;
  int required = 0;  // b/2 + floor(b/4)
  bool holds = false;
  bool exceptional = false;  // consecutive or diff-3 exception structure
};

/// |D| >= b_{m-1}/2 + floor(b_{m-1}/4). Requires m >= 2.
DCountCheck check_L2_7(const NormalizedSet& a);

enum class P4Case { none, i, ii, iii };
std::string to_string(P4Case c);

struct P4Result {
  bool both_missing = false;  // 2k-3+b_{m-1} and 2k-2+b_{m-1} both outside 2^A'
  bool matches = false;       // both_missing and a structure matched
  P4Case structure = P4Case::none;  // structure test alone, independent of the sums
};

/// Requires m >= 2. `structure` reports whether A' and B equal one of the three
/// explicit interval-union configurations for this k.
P4Result check_P4(const NormalizedSet& a);

struct WitnessProfile {
  IntegerSet W;
  std::optional<int> w1;
  std::optional<int> w2;
  std::optional<int> m;  // gcd(w2 - w1, a_{k-1}) when |W| = 2
};

/// W = {w in [0, a_{k-1}] \ A : w, w + a_{k-1} not in 2^A}. Defined for every k, l.
WitnessProfile witness_profile(const NormalizedSet& a);

struct Decomposition {
  int m = 0;
  int w1 = 0;
  int w2 = 0;
  int v = 0;  // smallest element of V
  std::vector<int> V;
  IntegerSet H;       // m Z n [0, a_{k-1})
  IntegerSet U;       // {u in [0, m-1] n A : 2u != w2 mod m}
  IntegerSet Dminus;  // union over v in V of {r_v(x)}
  int x_max = 0;      // x ranges over [0, (a_{k-1} - m) / (2m)]
  /// v -> per x: (r_v(x), q(x)), with r_v(x) = v + x (w2 - w1) - q(x) a_{k-1} in [0, a_{k-1}).
  std::map<int, std::vector<std::pair<int, int>>> rv_table;
  IntegerSet reconstruction;  // {a_{k-1}} u (U + H) u Dminus
  bool reconstructs = false;
};

/// Requires w1 < w2 both in W; throws otherwise, and when V is empty.
Decomposition decompose(const NormalizedSet& a, int w1, int w2);

/// For u1 != u2 in [0, m-1] with u1 + u2 = w2 (mod m), exactly one of them lies in U.
bool check_paired_residues(const Decomposition& d);

struct SplitTriple {
  int s = 0;
  NormalizedSet A1;
  IntegerSet A2;
  NormalizedSet A2star;
  int k1 = 0;
  int k2 = 0;
  IntegerSet overlap;           // 2^A1 n 2^A2
  IntegerSet expected_overlap;  // {a_{s-1}+a_s, a_{s-1}+a_{s+1}, a_s+a_{s+1}}
  bool overlap_matches = false;
  bool count_inequality = false;  // |2^A| >= |2^A1| + |2^A2| - 3
};

/// A1 = {a_0..a_{s+1}}, A2 = {a_{s-1}..a_{k-1}}, A2* = A2 - a_{s-1}.
/// Requires 2 <= s <= k-2, a_{s-1} = 2s-2 and a_s = 2s-1; throws "no admissible split at s".
SplitTriple split_at(const NormalizedSet& a, int s);

/// The s in [2, k-2] with a_j < 2j for s <= j <= k-2 and a_{s-1} >= 2(s-1). Absent unless
/// a_{k-2} < 2k-4, a_{k-1} >= 2k-2 and a_i >= 2i for some i in [1, k-3].
std::optional<int> find_admissible_split(const NormalizedSet& a);

}  // namespace sumset

#endif  // SUMSET_STRUCTURE_HPP
