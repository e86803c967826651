// enumerate.hpp
//
// Exhaustive enumeration of normalized k-sets {0 = a_0 < a_1 < ... < a_{k-1}}
// with a_{k-1} in a range, in lexicographic order of the element lists.
//
// The search fixes a_1, a_2, ... in turn. Only necessary conditions prune a
// prefix: room for the remaining elements below l_max, the a_i < 2i growth
// constraint, and the penultimate-element constraint. The gcd and any custom
// predicate are applied to complete sets.
#ifndef SUMSET_ENUMERATE_HPP
#define SUMSET_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sumset/integer_set.hpp"

namespace sumset {

enum Constraint : unsigned {
  kGcdOne = 1U << 0,
  kGrowth = 1U << 1,                // a_i < 2i for 1 <= i <= k-2
  kLastGe2kMinus2 = 1U << 2,        // a_{k-1} >= 2k-2
  kLastEq2kMinus3 = 1U << 3,        // a_{k-1} = 2k-3
  kPenultimateLt2kMinus4 = 1U << 4, // a_{k-2} < 2k-4
};

/// Names: gcd_one, growth_a_i_lt_2i, last_ge_2k_minus_2, last_eq_2k_minus_3,
/// penultimate_lt_2k_minus_4.
unsigned parse_constraint(std::string_view name);
std::vector<std::string> constraint_names(unsigned mask);

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

struct EnumerationQuery {
  int k = 2;
  int l_min = 1;
  int l_max = 1;
  unsigned constraints = kGcdOne;
  /// Applied to complete sets after the named constraints. Must be thread-safe
  /// when the query runs sharded.
  std::function<bool(const NormalizedSet&)> custom;
  std::uint64_t budget = kDefaultBudget;

  /// Throws unless k >= 2, l_min >= k-1, l_min <= l_max, budget > 0.
  /// Normalized sets have gcd 1 by definition, so gcd_one is applied whether or
  /// not it is listed.
  void validate() const;
};

struct EnumerationStats {
  std::uint64_t nodes = 0;    // search nodes visited
  std::uint64_t yielded = 0;  // sets passed to the visitor
  bool truncated = false;     // budget ran out before the search finished
};

using SetVisitor = std::function<void(const NormalizedSet&)>;

/// Sequential search; the visitor sees sets in lexicographic order.
EnumerationStats enumerate(const EnumerationQuery& q, const SetVisitor& visit);

/// Convenience: every matching set, in order.
std::vector<NormalizedSet> enumerate_all(const EnumerationQuery& q, EnumerationStats* stats = nullptr);

/// Shards fix the first t interior elements, with t the smallest depth giving at
/// least 64 prefixes (or every interior element). Depends only on the query.
int shard_count(const EnumerationQuery& q);

/// Runs one shard. Concatenating shards 0..shard_count-1 gives the sequential order.
/// The budget applies to this shard alone.
EnumerationStats enumerate_shard(const EnumerationQuery& q, int shard, const SetVisitor& visit);

using ShardVisitor = std::function<void(int shard, const NormalizedSet&)>;

/// Runs every shard on `jobs` worker threads. Calls for the same shard are sequential
/// and ordered; different shards may run concurrently, so callers keep per-shard
/// state and merge it by shard index. The budget is shared across shards.
EnumerationStats enumerate_parallel(const EnumerationQuery& q, int jobs, const ShardVisitor& visit);

/// Sharded counterpart of enumerate_all; equal to it whenever the budget suffices.
std::vector<NormalizedSet> enumerate_all_parallel(const EnumerationQuery& q, int jobs,
                                                  EnumerationStats* stats = nullptr);

}  // namespace sumset

#endif  // SUMSET_ENUMERATE_HPP
