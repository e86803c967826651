// Acceptance gate: runs every release criterion and prints one PASS/FAIL line each.
// Exit status is nonzero when any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>

#include "oracle.hpp"
#include "sumset/bounds.hpp"
#include "sumset/families.hpp"
#include "sumset/structure.hpp"
#include "sumset/sumset.hpp"
#include "sumset/verify.hpp"

using namespace sumset;
using V = std::vector<int>;
using Clock = std::chrono::steady_clock;

namespace {

struct Result {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

V vec(const NormalizedSet& s) { return V(s.elements().begin(), s.elements().end()); }

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

RunOptions options() {
  RunOptions opt;
  opt.jobs = static_cast<int>(std::clamp(std::thread::hardware_concurrency(), 1U, 8U));
  return opt;
}

EnumerationQuery query(int k, int l_min, int l_max, unsigned c = kGcdOne) {
  EnumerationQuery q;
  q.k = k;
  q.l_min = l_min;
  q.l_max = l_max;
  q.constraints = c | kGcdOne;
  return q;
}

Result criterion1() {
  Result r;
  const auto t = Clock::now();
  const auto c = verify_conjecture(9, 22, options());
  const double secs = seconds_since(t);
  if (c.outcome != Outcome::verified) r.fail("outcome " + std::string(to_string(c.outcome)));
  if (!c.counterexamples.empty()) r.fail("refutations present");
  for (const auto& row : c.details["per_k"]) {
    if (row["k"].get<int>() >= 8 && row["violations"].get<int>() != 0) r.fail("violation in the k >= 8 slice");
  }
  for (const auto& lit : c.details["below_threshold_exceptions"]) {
    if (parse_set_literal(lit.get<std::string>()).size() > 7) r.fail("k > 7 set listed as an observation");
  }
  if (secs > 600) r.fail("took longer than 10 minutes");
  r.note += (r.note.empty() ? "" : "; ") + std::to_string(c.counts["sets_enumerated"].get<std::uint64_t>()) +
            " sets, " + std::to_string(c.counts["below_threshold_exceptions"].get<std::uint64_t>()) +
            " below-threshold observations, " + std::to_string(secs) + " s";
  return r;
}

std::string theorem3_certificate() { return verify_theorem3(4, 10, options()).dump(false); }

Result criterion2() {
  Result r;
  const auto t = Clock::now();
  const auto c = verify_theorem3(4, 10, options());
  if (c.outcome != Outcome::verified) r.fail("outcome " + std::string(to_string(c.outcome)));
  // Independent recomputation: classify == families u sporadics u (flagged entry plus one element).
  const auto flagged = flagged_sporadics();
  std::size_t explained = 0;
  for (int k = 4; k <= 10; ++k) {
    const auto extremal = classify_extremal(k, 2 * k - 3, options());
    auto expect = theorem3_union(k);
    for (const auto& e : extremal) {
      if (std::find(expect.begin(), expect.end(), e) != expect.end()) continue;
      const bool from_flagged = std::any_of(flagged.begin(), flagged.end(), [&](const NormalizedSet& f) {
        return f.k() + 1 == e.k() && is_subset(f.set(), e.set());
      });
      if (!from_flagged) r.fail("k=" + std::to_string(k) + " unexplained " + to_literal(e));
      ++explained;
      expect.push_back(e);
    }
    std::sort(expect.begin(), expect.end());
    if (expect != extremal) r.fail("k=" + std::to_string(k) + " family set is not extremal");
  }
  const double secs = seconds_since(t);
  if (secs > 300) r.fail("took longer than 5 minutes");
  r.note += (r.note.empty() ? "" : "; ") + std::to_string(c.counts["sets_extremal"].get<std::uint64_t>()) +
            " extremal sets, " + std::to_string(explained) + " explained by the flagged entry, " +
            std::to_string(secs) + " s";
  return r;
}

Result criterion3() {
  Result r;
  const auto c = verify_theorem2(5, 12, options());
  if (c.outcome != Outcome::verified) r.fail("outcome " + std::string(to_string(c.outcome)));
  for (const auto& row : c.details["per_k"]) {
    const int k = row["k"];
    const auto& eq = row["equality_sets"];
    if (k == 5 || k % 3 == 2) {
      if (!eq.empty()) r.fail("k=" + std::to_string(k) + " has equality sets");
    } else if (eq.size() != 1 || eq[0].get<std::string>() != to_literal(gen_theorem2(k))) {
      r.fail("k=" + std::to_string(k) + " equality set differs");
    }
    for (const auto& s : row["remark_2_1"]) {
      if (!s["shape_holds"].get<bool>()) r.fail("shape formula fails on " + s["set"].get<std::string>());
    }
    if (!row["below_bound"].empty()) r.fail("bound violated at k=" + std::to_string(k));
  }
  r.note += (r.note.empty() ? "" : "; ") + std::string("both readings: ") + c.details["readings"].dump();
  return r;
}

Result criterion4() {
  Result r;
  const auto c = verify_theorem1(3, 9, options());
  if (c.outcome != Outcome::verified || !c.counterexamples.empty()) r.fail("outcome " + std::string(to_string(c.outcome)));
  r.note += (r.note.empty() ? "" : "; ") + std::to_string(c.counts["sets_enumerated"].get<std::uint64_t>()) +
            " sets, cap 2k+6";
  return r;
}

Certificate lemma_certificate() {
  static const Certificate c = sweep_lemmas(3, 10, options());
  return c;
}

Result criterion5() {
  Result r;
  const auto c = lemma_certificate();
  for (const auto& v : c.details["violations"]) {
    if (v["stage"] == "section2") r.fail(v["check"].get<std::string>() + " on " + v["set"].get<std::string>());
  }
  r.note += (r.note.empty() ? "" : "; ") + std::to_string(c.counts["section2_sets"].get<std::uint64_t>()) +
            " hypothesis sets, k in [3,10]";
  return r;
}

Result criterion6() {
  Result r;
  const auto c = lemma_certificate();
  for (const auto& v : c.details["violations"]) {
    const auto stage = v["stage"].get<std::string>();
    if (stage == "witness" || stage == "extremal") r.fail(v["check"].get<std::string>() + " on " + v["set"].get<std::string>());
  }
  std::uint64_t decompositions = 0;
  std::uint64_t witness_sets = 0;
  for (const auto& row : c.details["per_stage"]["extremal"]) {
    if (row["k"].get<int>() >= 8) decompositions += row["tallies"].value("decompositions", std::uint64_t{0});
  }
  for (const auto& row : c.details["per_stage"]["witness"]) {
    if (row["k"].get<int>() >= 8) witness_sets += row["sets"].get<std::uint64_t>();
  }
  if (decompositions == 0) r.fail("no decompositions examined for k in [8,10]");
  r.note += (r.note.empty() ? "" : "; ") + std::to_string(witness_sets) + " sets for |W| <= 2, " +
            std::to_string(decompositions) + " decompositions, k in [8,10]";
  return r;
}

Result criterion7() {
  Result r;
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10000 && r.pass; ++trial) {
    const IntegerSet s(oracle::random_set(rng, 64, 512, 2), 512);
    const auto fast = restricted_sumset(s);
    const auto twice = sumset::sumset(s, s);
    if (V(fast.begin(), fast.end()) != oracle::restricted(V(s.begin(), s.end())) ||
        V(twice.begin(), twice.end()) != oracle::sumset(V(s.begin(), s.end()), V(s.begin(), s.end()))) {
      r.fail("random set " + to_literal(s));
    }
  }
  // Every domain enumerated by criteria 1-6.
  std::vector<EnumerationQuery> domains;
  for (int k = 3; k <= 9; ++k) domains.push_back(query(k, k - 1, 22));                                  // 1
  for (int k = 10; k <= 10; ++k) domains.push_back(query(k, 2 * k - 3, 2 * k - 3));                     // 2
  for (int k = 5; k <= 12; ++k) domains.push_back(query(k, 2 * k - 2, 2 * k + 6, kGrowth | kLastGe2kMinus2));  // 3, 5
  for (int k = 3; k <= 10; ++k) {
    domains.push_back(query(k, 2 * k - 2, 2 * k + 6, kPenultimateLt2kMinus4 | kLastGe2kMinus2));  // 4, split
  }
  domains.push_back(query(3, 4, 12, kGrowth | kLastGe2kMinus2));
  domains.push_back(query(4, 6, 14, kGrowth | kLastGe2kMinus2));
  domains.push_back(query(10, 9, 17));  // witness stage at k = 10
  std::uint64_t checked = 0;
  for (const auto& q : domains) {
    enumerate(q, [&](const NormalizedSet& a) {
      ++checked;
      const auto fast = restricted_sumset(a.set());
      if (V(fast.begin(), fast.end()) != oracle::restricted(vec(a))) {
        r.fail("enumerated set " + to_literal(a));
      }
    });
  }
  r.note += (r.note.empty() ? "" : "; ") + std::string("10000 random sets and ") + std::to_string(checked) +
            " enumerated sets";
  return r;
}

Result criterion8() {
  Result r;
  std::uint64_t n = 0;
  std::uint64_t aps = 0;
  for (int k = 2; k <= 8; ++k) {
    for (int l = k - 1; l <= 20; ++l) {
      oracle::for_each_normalized(k, l, [&](const V& v) {
        ++n;
        const IntegerSet s(v);
        const bool minimal = static_cast<int>(sumset::sumset(s, s).size()) == 2 * k - 1;
        const bool ap = is_arithmetic_progression(s).is_ap;
        aps += ap;
        if (minimal != ap) r.fail(to_literal(s));
      });
    }
  }
  r.note += (r.note.empty() ? "" : "; ") + std::to_string(n) + " sets, " + std::to_string(aps) + " progressions";
  return r;
}

Result criterion9() {
  Result r;
  const auto first = theorem3_certificate();
  const auto second = theorem3_certificate();
  RunOptions single;
  const auto third = verify_theorem3(4, 10, single).dump(false);
  if (first != second) r.fail("reruns differ");
  if (first != third) r.fail("single-threaded run differs");
  r.note += (r.note.empty() ? "" : "; ") + std::to_string(first.size()) + " bytes compared";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"conjecture sweep k <= 9, l <= 22", criterion1},
      {"extremal classification k in [4,10]", criterion2},
      {"equality characterization k in [5,12]", criterion3},
      {"a_{k-2} < 2k-4 bound k in [3,9]", criterion4},
      {"section-2 lemma suite k in [3,10]", criterion5},
      {"witness and decomposition suite", criterion6},
      {"kernel oracle equivalence", criterion7},
      {"|2A| = 2k-1 iff progression", criterion8},
      {"certificate determinism", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result res;
    try {
      res = criteria[i].second();
    } catch (const std::exception& e) {
      res.fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %zu: %s  %s (%s)\n", i + 1, res.pass ? "PASS" : "FAIL", criteria[i].first, res.note.c_str());
    std::fflush(stdout);
    failed += res.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
