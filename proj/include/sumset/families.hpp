// families.hpp
//
// Generators for the sets with |2^A| = 3k - 7: the Theorem-2 family (a_{k-1} = 2k-2),
// the five parametric families with a_{k-1} = 2k-3, and the listed sporadic sets.
#ifndef SUMSET_FAMILIES_HPP
#define SUMSET_FAMILIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sumset/integer_set.hpp"

namespace sumset {

enum class FamilyKind {
  t2_mod0,        // k = 0 mod 3, max 2k-2
  t2_mod1,        // k = 1 mod 3, max 2k-2
  t3_interval,    // [0, theta-k+1] u [theta, 2k-3]
  t3_parity,      // evens up to 2 theta, odds from 2 theta + 1
  t3_mod3_pair,   // {3i, 3j-k}
  t3_four,        // {0, 4i, 4i-3, 2k-3}
  t3_mod3_shift,  // multiples of 3 plus a shifted progression
  t3_sporadic,
};

std::string_view to_string(FamilyKind kind);
/// Throws on unknown names; accepts the strings produced by to_string.
FamilyKind parse_family_kind(std::string_view name);
const std::vector<FamilyKind>& all_family_kinds();
bool takes_theta(FamilyKind kind);

/// A validated parameter choice. Construction fails for parameters outside the
/// stated ranges.
class FamilySpec {
 public:
  static FamilySpec make(FamilyKind kind, int k, std::optional<int> theta = std::nullopt,
                         std::optional<int> sporadic_index = std::nullopt);

  FamilyKind kind() const { return kind_; }
  int k() const { return k_; }
  std::optional<int> theta() const { return theta_; }
  std::optional<int> sporadic_index() const { return sporadic_index_; }
  std::string describe() const;

 private:
  FamilySpec(FamilyKind kind, int k, std::optional<int> theta, std::optional<int> sporadic_index)
      : kind_(kind), k_(k), theta_(theta), sporadic_index_(sporadic_index) {}
  FamilyKind kind_;
  int k_;
  std::optional<int> theta_;
  std::optional<int> sporadic_index_;
};

NormalizedSet generate(const FamilySpec& spec);

/// The unique equality set for k >= 6, k = 0 or 1 mod 3.
NormalizedSet gen_theorem2(int k);
NormalizedSet gen_t3_interval(int k, int theta);
NormalizedSet gen_t3_parity(int k, int theta);
NormalizedSet gen_t3_mod3_pair(int k, int theta);
NormalizedSet gen_t3_four(int k);
NormalizedSet gen_t3_mod3_shift(int k, int theta);

/// Every theta accepted by the family's stated range at this k (empty when the family
/// does not exist at k).
std::vector<int> valid_thetas(FamilyKind kind, int k);

struct SporadicEntry {
  NormalizedSet set;
  std::string source;  // "listed" or "row1 theta=2" etc.
  bool consistent = true;  // max == 2k - 3
};

/// All listed sporadic sets with the two parametric rows expanded over theta in [1, 4].
/// Duplicates are removed; entries whose maximum is not 2k-3 are kept and flagged.
const std::vector<SporadicEntry>& sporadic_catalog();
/// Consistent catalog entries with |A| = k, sorted.
std::vector<NormalizedSet> sporadics_for(int k);
/// Flagged (inconsistent) entries, as listed.
std::vector<NormalizedSet> flagged_sporadics();

struct FamilyMember {
  FamilySpec spec;
  NormalizedSet set;
};

/// Every family member (both theorems, plus sporadics) with |A| = k, in kind order.
std::vector<FamilyMember> family_members(int k);

/// Sorted, deduplicated union of the five a_{k-1} = 2k-3 families and the consistent
/// sporadics for k.
std::vector<NormalizedSet> theorem3_union(int k);

/// [0, k-3] u {2k-4, 2k-3} followed by the thirteen listed sets.
std::vector<NormalizedSet> remark_r1_catalog(int k);

/// Requires a_{k-3} = 2k-6, a_{k-2} = 2k-5, a_{k-1} = 2k-3; returns a_{k-4} == 2k-8.
bool remark_r2_filter(const NormalizedSet& a);

/// Requires a_i < 2i (i <= k-2), a_{k-1} >= 2k-2 and |2^A| = 3k-7. Returns whether
/// 2^A = ([1, 2k-4] \ {2, 2k-6}) u (a_{k-1} + A').
bool remark_2_1_shape(const NormalizedSet& a);

}  // namespace sumset

#endif  // SUMSET_FAMILIES_HPP
