#include "sumset/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <thread>

namespace sumset {
namespace {

constexpr std::array<std::pair<unsigned, std::string_view>, 5> kConstraintNames{{
    {kGcdOne, "gcd_one"},
    {kGrowth, "growth_a_i_lt_2i"},
    {kLastGe2kMinus2, "last_ge_2k_minus_2"},
    {kLastEq2kMinus3, "last_eq_2k_minus_3"},
    {kPenultimateLt2kMinus4, "penultimate_lt_2k_minus_4"},
}};

constexpr std::size_t kMinShards = 64;

// Charges one node per call; returns false once the budget is spent.
class Budget {
 public:
  virtual ~Budget() = default;
  virtual bool charge() = 0;
};

class LocalBudget final : public Budget {
 public:
  explicit LocalBudget(std::uint64_t limit) : limit_(limit) {}
  bool charge() override { return ++used_ <= limit_; }
  std::uint64_t used() const { return std::min(used_, limit_); }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

class SharedBudget final : public Budget {
 public:
  explicit SharedBudget(std::uint64_t limit) : limit_(limit) {}
  bool charge() override { return used_.fetch_add(1, std::memory_order_relaxed) < limit_; }
  std::uint64_t used() const { return std::min(used_.load(), limit_); }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> used_{0};
};

struct Range {
  int lo;
  int hi;
};

class Search {
 public:
  Search(const EnumerationQuery& q, Budget& budget, const SetVisitor& visit)
      : q_(q), k_(q.k), budget_(budget), visit_(visit), a_(static_cast<std::size_t>(q.k), 0) {}

  // Interior position i in [1, k-2], given a_{i-1} = prev.
  Range interior(int i, int prev) const {
    Range r{prev + 1, q_.l_max - (k_ - 1 - i)};
    if (q_.constraints & kGrowth) r.hi = std::min(r.hi, 2 * i - 1);
    if ((q_.constraints & kPenultimateLt2kMinus4) && i == k_ - 2) r.hi = std::min(r.hi, 2 * k_ - 5);
    return r;
  }

  Range last(int prev) const {
    Range r{std::max(prev + 1, q_.l_min), q_.l_max};
    if (q_.constraints & kLastGe2kMinus2) r.lo = std::max(r.lo, 2 * k_ - 2);
    if (q_.constraints & kLastEq2kMinus3) {
      r.lo = std::max(r.lo, 2 * k_ - 3);
      r.hi = std::min(r.hi, 2 * k_ - 3);
    }
    // a_0 = 0 is never below 2k-4 = 0
    if ((q_.constraints & kPenultimateLt2kMinus4) && k_ == 2) r.hi = r.lo - 1;
    return r;
  }

  // Runs below a fixed prefix a_1..a_t. Returns false when the budget ran out.
  bool run(const std::vector<int>& prefix) {
    int g = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      a_[i + 1] = prefix[i];
      g = std::gcd(g, prefix[i]);
    }
    return descend(static_cast<int>(prefix.size()) + 1, g);
  }

  std::uint64_t yielded() const { return yielded_; }

 private:
  bool descend(int i, int g) {
    const int prev = a_[static_cast<std::size_t>(i - 1)];
    if (i == k_ - 1) {
      const Range r = last(prev);
      for (int v = r.lo; v <= r.hi; ++v) {
        if (!budget_.charge()) return false;
        if (std::gcd(g, v) != 1) continue;
        a_.back() = v;
        NormalizedSet s(IntegerSet(a_, v));
        if (q_.custom && !q_.custom(s)) continue;
        ++yielded_;
        visit_(s);
      }
      return true;
    }
    const Range r = interior(i, prev);
    for (int v = r.lo; v <= r.hi; ++v) {
      if (!budget_.charge()) return false;
      a_[static_cast<std::size_t>(i)] = v;
      if (!descend(i + 1, std::gcd(g, v))) return false;
    }
    return true;
  }

  const EnumerationQuery& q_;
  int k_;
  Budget& budget_;
  const SetVisitor& visit_;
  std::vector<int> a_;
  std::uint64_t yielded_ = 0;
};

struct Shards {
  std::vector<std::vector<int>> prefixes;
  // Prefix nodes first reached by each shard in DFS order; a shard charges these
  // before searching, so the budget caps every node including the shared prefixes.
  std::vector<int> fresh;
};

bool charge_prefix(Budget& budget, int fresh) {
  for (int i = 0; i < fresh; ++i) {
    if (!budget.charge()) return false;
  }
  return true;
}

Shards make_shards(const EnumerationQuery& q) {
  Shards out;
  out.prefixes.push_back({});
  const SetVisitor none;
  LocalBudget unused(1);
  Search probe(q, unused, none);
  for (int depth = 1; depth <= q.k - 2 && out.prefixes.size() < kMinShards; ++depth) {
    std::vector<std::vector<int>> next;
    for (const auto& p : out.prefixes) {
      const int prev = p.empty() ? 0 : p.back();
      const Range r = probe.interior(depth, prev);
      for (int v = r.lo; v <= r.hi; ++v) {
        next.push_back(p);
        next.back().push_back(v);
      }
    }
    out.prefixes = std::move(next);
  }
  const std::vector<int>* prev = nullptr;
  for (const auto& p : out.prefixes) {
    std::size_t common = 0;
    while (prev && common < p.size() && (*prev)[common] == p[common]) ++common;
    out.fresh.push_back(static_cast<int>(p.size() - common));
    prev = &p;
  }
  return out;
}

}  // namespace

unsigned parse_constraint(std::string_view name) {
  for (const auto& [bit, n] : kConstraintNames) {
    if (n == name) return bit;
  }
  throw Error("unknown constraint '" + std::string(name) + "'");
}

std::vector<std::string> constraint_names(unsigned mask) {
  std::vector<std::string> out;
  for (const auto& [bit, n] : kConstraintNames) {
    if (mask & bit) out.emplace_back(n);
  }
  return out;
}

void EnumerationQuery::validate() const {
  if (k < 2) throw Error("enumeration needs k >= 2");
  if (l_min < k - 1) throw Error("enumeration needs l >= k - 1");
  if (l_max < l_min) throw Error("empty l range");
  if (l_max > kDefaultMaxElement) throw Error("l exceeds " + std::to_string(kDefaultMaxElement));
  if (budget == 0) throw Error("budget must be positive");
}

int shard_count(const EnumerationQuery& q) {
  q.validate();
  return static_cast<int>(make_shards(q).prefixes.size());
}

EnumerationStats enumerate_shard(const EnumerationQuery& q, int shard, const SetVisitor& visit) {
  q.validate();
  const auto shards = make_shards(q);
  if (shard < 0 || static_cast<std::size_t>(shard) >= shards.prefixes.size()) throw Error("shard index out of range");
  const auto i = static_cast<std::size_t>(shard);
  LocalBudget budget(q.budget);
  Search search(q, budget, visit);
  EnumerationStats st;
  st.truncated = !charge_prefix(budget, shards.fresh[i]) || !search.run(shards.prefixes[i]);
  st.nodes = budget.used();
  st.yielded = search.yielded();
  return st;
}

EnumerationStats enumerate(const EnumerationQuery& q, const SetVisitor& visit) {
  q.validate();
  const auto shards = make_shards(q);
  EnumerationStats st;
  LocalBudget budget(q.budget);
  Search search(q, budget, visit);
  for (std::size_t i = 0; i < shards.prefixes.size(); ++i) {
    if (!charge_prefix(budget, shards.fresh[i]) || !search.run(shards.prefixes[i])) {
      st.truncated = true;
      break;
    }
  }
  st.nodes = budget.used();
  st.yielded = search.yielded();
  return st;
}

std::vector<NormalizedSet> enumerate_all(const EnumerationQuery& q, EnumerationStats* stats) {
  std::vector<NormalizedSet> out;
  const auto st = enumerate(q, [&](const NormalizedSet& s) { out.push_back(s); });
  if (stats) *stats = st;
  return out;
}

EnumerationStats enumerate_parallel(const EnumerationQuery& q, int jobs, const ShardVisitor& visit) {
  q.validate();
  if (jobs < 1) throw Error("jobs must be positive");
  const auto shards = make_shards(q);
  SharedBudget budget(q.budget);
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> yielded{0};
  std::atomic<bool> truncated{false};

  auto worker = [&] {
    for (std::size_t i = next++; i < shards.prefixes.size() && !truncated; i = next++) {
      const int shard = static_cast<int>(i);
      const SetVisitor v = [&](const NormalizedSet& s) { visit(shard, s); };
      Search search(q, budget, v);
      if (!charge_prefix(budget, shards.fresh[i]) || !search.run(shards.prefixes[i])) truncated = true;
      yielded += search.yielded();
    }
  };
  const int n = std::min<int>(jobs, static_cast<int>(shards.prefixes.size()));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  EnumerationStats st;
  st.nodes = budget.used();
  st.yielded = yielded;
  st.truncated = truncated;
  return st;
}

std::vector<NormalizedSet> enumerate_all_parallel(const EnumerationQuery& q, int jobs, EnumerationStats* stats) {
  std::vector<std::vector<NormalizedSet>> per_shard(static_cast<std::size_t>(shard_count(q)));
  const auto st = enumerate_parallel(q, jobs, [&](int shard, const NormalizedSet& s) {
    per_shard[static_cast<std::size_t>(shard)].push_back(s);
  });
  std::vector<NormalizedSet> out;
  for (auto& v : per_shard) {
    for (auto& s : v) out.push_back(std::move(s));
  }
  if (stats) *stats = st;
  return out;
}

}  // namespace sumset
