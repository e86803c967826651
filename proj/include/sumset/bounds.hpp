// bounds.hpp
//
// Lower bounds for |2A| and |2^A| of a k-element set A in [0, l] with 0, l in A
// and gcd(A) = 1, together with the structure detectors that go with the
// equality and near-equality cases.
#ifndef SUMSET_BOUNDS_HPP
#define SUMSET_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumset/integer_set.hpp"

namespace sumset {

/// An exact real of the form (twice_rational + sqrt5_coeff * sqrt(5)) / 2.
///
/// Covers every bound in this module: integers, half-integers, and the golden
/// ratio bound (theta + 1) k - 6 = (3k - 12 + k sqrt 5) / 2. Comparisons with
/// integers are decided in exact integer arithmetic.
class ExactBound {
 public:
  static ExactBound integer(std::int64_t n) { return ExactBound(2 * n, 0); }
  static ExactBound halves(std::int64_t twice) { return ExactBound(twice, 0); }
  static ExactBound with_sqrt5(std::int64_t twice_rational, std::int64_t sqrt5_coeff);

  bool is_rational() const { return sqrt5_coeff_ == 0; }
  bool is_integer() const { return is_rational() && twice_rational_ % 2 == 0; }
  std::int64_t twice_rational() const { return twice_rational_; }
  std::int64_t sqrt5_coeff() const { return sqrt5_coeff_; }

  /// n >= bound
  bool satisfied_by(std::int64_t n) const;
  /// n == bound (never true for an irrational bound)
  bool attained_by(std::int64_t n) const { return is_rational() && 2 * n == twice_rational_; }

  /// Outward-rounded enclosure [lo, hi] in units of 1e-6, i.e. lo/1e6 <= value <= hi/1e6.
  std::pair<std::int64_t, std::int64_t> enclosure_micro() const;
  double approx() const;
  /// "12", "10.5", or "[20.180339, 20.180340]" for irrational values.
  std::string to_string() const;

  friend bool operator==(const ExactBound&, const ExactBound&) = default;

 private:
  ExactBound(std::int64_t twice_rational, std::int64_t sqrt5_coeff)
      : twice_rational_(twice_rational), sqrt5_coeff_(sqrt5_coeff) {}
  std::int64_t twice_rational_ = 0;
  std::int64_t sqrt5_coeff_ = 0;
};

/// Does bound a <= bound b hold? Exact.
bool bound_le(const ExactBound& a, const ExactBound& b);

/// |2A| >= 2k - 1.
int bound_thmA(int k);
/// |2A| >= l + k (l <= 2k-3) or 3k - 3 (l >= 2k-2).
int bound_thmB(int k, int l);
/// Conjectured |2^A| >= l + k - 2 (l <= 2k-5) or 3k - 7 (l >= 2k-4).
int bound_freiman_lev(int k, int l);
/// |2^A| >= (l + k)/2 + k - 3.5 (l <= 2k-3) or 2.5k - 5 (l >= 2k-2).
ExactBound bound_thmE(int k, int l);
/// |2^A| >= l + k - 2 (l <= 2k-5) or (theta + 1) k - 6 (l >= 2k-4), theta = (1 + sqrt 5)/2.
ExactBound bound_thmF(int k, int l);

struct ApResult {
  bool is_ap = false;
  std::optional<int> difference;
};

/// Sets of size <= 2 are APs; a singleton has no difference.
ApResult is_arithmetic_progression(const IntegerSet& a);

/// Length of the shortest AP containing A. For gcd-1 sets starting at 0 this is l + 1.
int ap_cover_length(const NormalizedSet& a);
/// Same, for an arbitrary set (normalizes first).
int ap_cover_length(const IntegerSet& a);

/// Is A = P1 u P2 with P1, P2 arithmetic progressions of one common difference d?
/// A length-1 progression fits any d. Returns the smallest such d.
///
/// Step-d progressions live inside single residue classes mod d and inside single
/// maximal runs x, x+d, x+2d, ... of A, so A qualifies for d exactly when it has at
/// most two maximal step-d runs.
ApResult is_union_two_aps_same_diff(const IntegerSet& a);

struct BoundEntry {
  std::string name;
  std::string target;  // "2A" or "2^A"
  bool applicable = true;
  bool in_hypothesis = true;
  ExactBound bound = ExactBound::integer(0);
  std::int64_t observed = 0;
  bool satisfied = false;
  bool tight = false;
};

struct StructureCheck {
  std::string name;
  bool applicable = false;
  bool holds = true;
  std::string detail;
};

struct BoundReport {
  int k = 0;
  int l = 0;
  std::optional<std::int64_t> card_2A;
  std::optional<std::int64_t> card_2hatA;
  std::vector<BoundEntry> entries;
  std::vector<StructureCheck> structure;

  const BoundEntry& entry(const std::string& name) const;
};

/// Evaluates every bound on A. Requires k >= 3.
BoundReport evaluate_bounds(const NormalizedSet& a);

/// Aligned text, one line per entry.
std::string format_report(const BoundReport& r);
/// Single-line JSON object.
std::string report_json(const BoundReport& r);

}  // namespace sumset

#endif  // SUMSET_BOUNDS_HPP
