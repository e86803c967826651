#include "sumset/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "sumset/bounds.hpp"
#include "sumset/families.hpp"
#include "sumset/structure.hpp"
#include "sumset/sumset.hpp"

namespace sumset {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

int card2hat(const NormalizedSet& a) { return static_cast<int>(restricted_sumset_size(a.set())); }

int last_cap(const RunOptions& opt, int k) {
  const int cap = opt.cap.value_or(2 * k + 6);
  if (cap < 2 * k - 2) throw Error("cap " + std::to_string(cap) + " is below 2k-2 = " + std::to_string(2 * k - 2));
  return cap;
}

Json cap_json(const RunOptions& opt) { return opt.cap ? Json(*opt.cap) : Json("2k+6"); }

EnumerationQuery make_query(int k, int l_min, int l_max, unsigned constraints, const RunOptions& opt) {
  EnumerationQuery q;
  q.k = k;
  q.l_min = l_min;
  q.l_max = l_max;
  q.constraints = constraints | kGcdOne;
  q.budget = opt.budget;
  return q;
}

Json query_json(std::string_view command, int k_min, int k_max, unsigned constraints, const RunOptions& opt) {
  Json q;
  q["command"] = std::string(command);
  q["k_min"] = k_min;
  q["k_max"] = k_max;
  q["constraints"] = constraint_names(constraints | kGcdOne);
  q["budget"] = opt.budget;
  return q;
}

// Runs the query on opt.jobs threads with one accumulator per shard; the accumulators
// come back in shard order, so concatenating them preserves lexicographic order.
template <class Acc, class Fn>
EnumerationStats run_sharded(const EnumerationQuery& q, const RunOptions& opt, std::vector<Acc>& accs, Fn fn) {
  accs.assign(static_cast<std::size_t>(shard_count(q)), Acc{});
  return enumerate_parallel(q, std::max(1, opt.jobs),
                            [&](int shard, const NormalizedSet& a) { fn(accs[static_cast<std::size_t>(shard)], a); });
}

std::vector<std::string> literals(const std::vector<NormalizedSet>& sets) {
  std::vector<std::string> out;
  for (const auto& s : sets) out.push_back(to_literal(s));
  return out;
}

void accumulate(Json& counts, const char* key, std::uint64_t n) {
  counts[key] = counts.value(key, std::uint64_t{0}) + n;
}

}  // namespace

Certificate verify_conjecture(int k_max, int l_max, const RunOptions& opt) {
  if (k_max < 3) throw Error("conjecture sweep needs k_max >= 3");
  if (l_max < 2 * k_max - 4) throw Error("conjecture sweep needs l_max >= 2 k_max - 4");
  const auto start = Clock::now();
  Certificate c;
  c.claim = "freiman_lev_bound";
  c.query = query_json("conjecture", 3, k_max, kGcdOne, opt);
  c.query["l_max"] = l_max;
  c.cap = l_max;
  c.counts = {{"sets_enumerated", 0}, {"sets_extremal", 0}, {"below_threshold_exceptions", 0}};

  struct Acc {
    std::uint64_t sets = 0;
    std::uint64_t tight = 0;
    std::map<int, int> min_by_l;
    std::vector<std::string> failures;
  };
  bool truncated = false;
  Json per_k = Json::array();
  Json below = Json::array();
  for (int k = 3; k <= k_max; ++k) {
    std::vector<Acc> accs;
    const auto st = run_sharded(make_query(k, k - 1, l_max, kGcdOne, opt), opt, accs, [&](Acc& acc, const NormalizedSet& a) {
      const int n = card2hat(a);
      const int bound = bound_freiman_lev(k, a.l());
      ++acc.sets;
      if (n == bound) ++acc.tight;
      auto [it, fresh] = acc.min_by_l.try_emplace(a.l(), n);
      if (!fresh) it->second = std::min(it->second, n);
      if (n < bound) acc.failures.push_back(to_literal(a));
    });
    truncated = truncated || st.truncated;
    Acc total;
    for (auto& acc : accs) {
      total.sets += acc.sets;
      total.tight += acc.tight;
      for (auto [l, n] : acc.min_by_l) {
        auto [it, fresh] = total.min_by_l.try_emplace(l, n);
        if (!fresh) it->second = std::min(it->second, n);
      }
      for (auto& f : acc.failures) total.failures.push_back(std::move(f));
    }
    Json mins = Json::object();
    for (auto [l, n] : total.min_by_l) mins[std::to_string(l)] = n;
    per_k.push_back({{"k", k},
                     {"sets", total.sets},
                     {"in_hypothesis", k > 7},
                     {"violations", total.failures.size()},
                     {"min_card_2hatA_by_l", mins}});
    accumulate(c.counts, "sets_enumerated", total.sets);
    accumulate(c.counts, "sets_extremal", total.tight);
    if (k > 7) {
      for (auto& f : total.failures) c.counterexamples.push_back(std::move(f));
    } else {
      accumulate(c.counts, "below_threshold_exceptions", total.failures.size());
      for (auto& f : total.failures) below.push_back(std::move(f));
    }
  }
  c.details["per_k"] = per_k;
  c.details["below_threshold_exceptions"] = below;
  c.finalize(truncated);
  c.wall_time_ms = elapsed_ms(start);
  return c;
}

std::vector<NormalizedSet> classify_extremal(int k, int l, const RunOptions& opt, EnumerationStats* stats) {
  if (k < 4) throw Error("classification needs k >= 4");
  std::vector<std::vector<NormalizedSet>> accs;
  const auto st = run_sharded(make_query(k, l, l, kGcdOne, opt), opt, accs, [&](auto& acc, const NormalizedSet& a) {
    if (card2hat(a) == 3 * k - 7) acc.push_back(a);
  });
  if (stats) *stats = st;
  if (st.truncated) throw Error("budget exhausted while classifying k = " + std::to_string(k));
  std::vector<NormalizedSet> out;
  for (auto& acc : accs) {
    for (auto& s : acc) out.push_back(std::move(s));
  }
  return out;
}

Certificate verify_theorem3(int k_min, int k_max, const RunOptions& opt) {
  if (k_min < 4 || k_max < k_min) throw Error("theorem 3 needs 4 <= k_min <= k_max");
  if (k_max > opt.desk_limit) throw Error("k_max exceeds the desk limit " + std::to_string(opt.desk_limit));
  const auto start = Clock::now();
  Certificate c;
  c.claim = "classification_matches_families";
  c.query = query_json("theorem3", k_min, k_max, kLastEq2kMinus3, opt);
  c.cap = nullptr;
  c.counts = {{"sets_enumerated", 0}, {"sets_extremal", 0}};

  const auto flagged = flagged_sporadics();
  Json per_k = Json::array();
  Json explained = Json::array();
  bool truncated = false;
  for (int k = k_min; k <= k_max; ++k) {
    const int l = 2 * k - 3;
    EnumerationStats st;
    std::vector<NormalizedSet> extremal;
    std::vector<std::vector<NormalizedSet>> accs;
    st = run_sharded(make_query(k, l, l, kGcdOne, opt), opt, accs, [&](auto& acc, const NormalizedSet& a) {
      if (card2hat(a) == 3 * k - 7) acc.push_back(a);
    });
    truncated = truncated || st.truncated;
    for (auto& acc : accs) {
      for (auto& s : acc) extremal.push_back(std::move(s));
    }
    const auto families = theorem3_union(k);

    std::vector<NormalizedSet> missing;
    std::vector<NormalizedSet> spurious;
    std::set_difference(extremal.begin(), extremal.end(), families.begin(), families.end(), std::back_inserter(missing));
    std::set_difference(families.begin(), families.end(), extremal.begin(), extremal.end(), std::back_inserter(spurious));

    Json unexplained = Json::array();
    for (const auto& m : missing) {
      auto it = std::find_if(flagged.begin(), flagged.end(), [&](const NormalizedSet& f) {
        return f.k() + 1 == m.k() && is_subset(f.set(), m.set());
      });
      if (it != flagged.end()) {
        explained.push_back({{"set", to_literal(m)}, {"flagged_entry", to_literal(*it)}});
      } else {
        unexplained.push_back(to_literal(m));
        c.counterexamples.push_back(to_literal(m));
      }
    }
    for (const auto& s : spurious) c.counterexamples.push_back(to_literal(s));

    per_k.push_back({{"k", k},
                     {"l", l},
                     {"sets", st.yielded},
                     {"extremal", extremal.size()},
                     {"family_union", families.size()},
                     {"missing", unexplained},
                     {"spurious", literals(spurious)}});
    accumulate(c.counts, "sets_enumerated", st.yielded);
    accumulate(c.counts, "sets_extremal", extremal.size());
  }
  c.details["per_k"] = per_k;
  c.details["explained_by_flagged"] = explained;
  c.details["flagged_catalog_entries"] = literals(flagged);
  c.finalize(truncated);
  c.wall_time_ms = elapsed_ms(start);
  return c;
}

Certificate verify_theorem2(int k_min, int k_max, const RunOptions& opt) {
  if (k_min < 3 || k_max < k_min) throw Error("theorem 2 needs 3 <= k_min <= k_max");
  const auto start = Clock::now();
  const unsigned constraints = kGrowth | kLastGe2kMinus2;
  Certificate c;
  c.claim = "theorem2_bound_and_equality";
  c.query = query_json("theorem2", k_min, k_max, constraints, opt);
  c.cap = cap_json(opt);
  c.counts = {{"sets_enumerated", 0}, {"sets_extremal", 0}};

  struct Acc {
    std::uint64_t sets = 0;
    std::vector<NormalizedSet> below;
    std::vector<NormalizedSet> equal;
  };
  bool truncated = false;
  bool reading_all = true;
  bool reading_min = true;
  Json per_k = Json::array();
  for (int k = k_min; k <= k_max; ++k) {
    const int cap = last_cap(opt, k);
    std::vector<Acc> accs;
    const auto st = run_sharded(make_query(k, 2 * k - 2, cap, constraints, opt), opt, accs,
                                [&](Acc& acc, const NormalizedSet& a) {
                                  const int n = card2hat(a);
                                  ++acc.sets;
                                  if (n < 3 * k - 7) acc.below.push_back(a);
                                  if (n == 3 * k - 7) acc.equal.push_back(a);
                                });
    truncated = truncated || st.truncated;
    Acc total;
    for (auto& acc : accs) {
      total.sets += acc.sets;
      for (auto& s : acc.below) total.below.push_back(std::move(s));
      for (auto& s : acc.equal) total.equal.push_back(std::move(s));
    }

    std::vector<NormalizedSet> expected;
    if (k >= 6 && k % 3 != 2) expected.push_back(gen_theorem2(k));
    std::vector<NormalizedSet> at_min;
    std::copy_if(total.equal.begin(), total.equal.end(), std::back_inserter(at_min),
                 [&](const NormalizedSet& a) { return a.l() == 2 * k - 2; });
    const bool all_ok = total.equal == expected;
    const bool min_ok = at_min == expected;
    reading_all = reading_all && all_ok;
    reading_min = reading_min && min_ok;

    // The statement quantifies over every a_{k-1} >= 2k-2, so any difference from the
    // expected equality set is a counterexample.
    std::vector<NormalizedSet> diff;
    std::set_symmetric_difference(total.equal.begin(), total.equal.end(), expected.begin(), expected.end(),
                                  std::back_inserter(diff));
    for (const auto& s : diff) c.counterexamples.push_back(to_literal(s));
    for (const auto& s : total.below) c.counterexamples.push_back(to_literal(s));

    Json shape = Json::array();
    for (const auto& s : total.equal) {
      const bool ok = remark_2_1_shape(s);
      shape.push_back({{"set", to_literal(s)}, {"shape_holds", ok}});
      if (!ok) c.counterexamples.push_back(to_literal(s));
    }

    per_k.push_back({{"k", k},
                     {"a_last_max", cap},
                     {"sets", total.sets},
                     {"below_bound", literals(total.below)},
                     {"equality_sets", literals(total.equal)},
                     {"expected_equality_sets", literals(expected)},
                     {"remark_2_1", shape}});
    accumulate(c.counts, "sets_enumerated", total.sets);
    accumulate(c.counts, "sets_extremal", total.equal.size());
  }
  c.details["per_k"] = per_k;
  c.details["readings"] = {{"equality_characterized_over_all_a_last", reading_all},
                           {"equality_characterized_at_a_last_eq_2k_minus_2", reading_min}};
  c.finalize(truncated);
  c.wall_time_ms = elapsed_ms(start);
  return c;
}

Certificate verify_theorem1(int k_min, int k_max, const RunOptions& opt) {
  if (k_min < 3 || k_max < k_min) throw Error("theorem 1 needs 3 <= k_min <= k_max");
  const auto start = Clock::now();
  const unsigned constraints = kPenultimateLt2kMinus4 | kLastGe2kMinus2;
  Certificate c;
  c.claim = "theorem1_bound";
  c.query = query_json("theorem1", k_min, k_max, constraints, opt);
  c.cap = cap_json(opt);
  c.counts = {{"sets_enumerated", 0}, {"sets_extremal", 0}};

  struct Acc {
    std::uint64_t sets = 0;
    std::uint64_t tight = 0;
    int min = 1 << 30;
    std::vector<std::string> below;
  };
  bool truncated = false;
  Json per_k = Json::array();
  for (int k = k_min; k <= k_max; ++k) {
    const int cap = last_cap(opt, k);
    std::vector<Acc> accs;
    const auto st = run_sharded(make_query(k, 2 * k - 2, cap, constraints, opt), opt, accs,
                                [&](Acc& acc, const NormalizedSet& a) {
                                  const int n = card2hat(a);
                                  ++acc.sets;
                                  acc.min = std::min(acc.min, n);
                                  if (n == 3 * k - 7) ++acc.tight;
                                  if (n < 3 * k - 7) acc.below.push_back(to_literal(a));
                                });
    truncated = truncated || st.truncated;
    Acc total;
    for (auto& acc : accs) {
      total.sets += acc.sets;
      total.tight += acc.tight;
      total.min = std::min(total.min, acc.min);
      for (auto& s : acc.below) c.counterexamples.push_back(std::move(s));
    }
    per_k.push_back({{"k", k},
                     {"a_last_max", cap},
                     {"sets", total.sets},
                     {"bound", 3 * k - 7},
                     {"min_card_2hatA", total.sets ? Json(total.min) : Json(nullptr)}});
    accumulate(c.counts, "sets_enumerated", total.sets);
    accumulate(c.counts, "sets_extremal", total.tight);
  }
  c.details["per_k"] = per_k;
  c.finalize(truncated);
  c.wall_time_ms = elapsed_ms(start);
  return c;
}

namespace {

struct Violation {
  std::string stage;
  std::string check;
  std::string set;
  std::string detail;
};

struct LemmaAcc {
  std::uint64_t sets = 0;
  std::vector<Violation> violations;
  std::vector<Violation> observations;
  std::map<std::string, std::uint64_t> tallies;
};

void section2_checks(LemmaAcc& acc, const NormalizedSet& a) {
  const std::string lit = to_literal(a);
  auto fail = [&](std::string check, std::string detail = {}) {
    acc.violations.push_back({"section2", std::move(check), lit, std::move(detail)});
  };
  ++acc.sets;
  if (!check_L2_1(a)) fail("L2-1");
  for (const auto& v : check_L2_2(a)) fail("L2-2(" + v.clause + ")", "b=" + std::to_string(v.b) + " " + v.detail);
  const auto iii = check_L2_2_iii(a);
  for (const auto& v : iii.violations) fail("L2-2(iii)", "b=" + std::to_string(v.b) + " " + v.detail);
  for (const auto& v : iii.out_of_hypothesis) {
    acc.observations.push_back({"section2", "L2-2(iii) with b >= k-2", lit, "b=" + std::to_string(v.b) + " " + v.detail});
  }
  if (!check_L2_3(a)) fail("L2-3");

  const auto e = exceptional_profile(a);
  ++acc.tallies["m=" + std::to_string(e.m)];
  if (e.m < 2) return;
  ++acc.tallies["window_sets"];
  const auto g = gap_patterns(a);
  if (g.has_diff2) fail("L2-5", "difference-2 pair in " + to_literal(g.missing));
  if (g.has_consecutive) {
    if (matches_consecutive_exception(a)) {
      ++acc.tallies["consecutive_exception"];
    } else {
      fail("L2-4", "consecutive pair in " + to_literal(g.missing));
    }
  }
  if (g.has_diff3) {
    if (auto which = matches_diff3_exception(a)) {
      ++acc.tallies["diff3_exception_case_" + std::to_string(*which)];
    } else {
      fail("L2-6", "difference-3 pair in " + to_literal(g.missing));
    }
  }
  const auto d = check_L2_7(a);
  if (!d.holds) {
    if (d.exceptional) {
      ++acc.tallies["L2-7_exceptional_structure"];
    } else {
      fail("L2-7", "|D|=" + std::to_string(d.d_count) + " < " + std::to_string(d.required));
    }
  }
  const auto p = check_P4(a);
  if (p.both_missing) {
    ++acc.tallies["P4_both_missing"];
    if (!p.matches) fail("P4", "both sums missing, no structure matched");
  }
  if (p.structure != P4Case::none && !p.both_missing) {
    acc.observations.push_back({"section2", "P4 structure without both sums missing", lit, to_string(p.structure)});
  }
}

void witness_checks(LemmaAcc& acc, const NormalizedSet& a) {
  ++acc.sets;
  const auto w = witness_profile(a);
  ++acc.tallies["W=" + std::to_string(w.W.size())];
  if (w.W.size() > 2) acc.violations.push_back({"witness", "L4-1", to_literal(a), "W=" + to_literal(w.W)});
}

void extremal_checks(LemmaAcc& acc, const NormalizedSet& a) {
  const int k = a.k();
  const std::string lit = to_literal(a);
  auto fail = [&](std::string check, std::string detail = {}) {
    acc.violations.push_back({"extremal", std::move(check), lit, std::move(detail)});
  };
  ++acc.sets;
  if (a[k - 3] == 2 * k - 6 && a[k - 2] == 2 * k - 5) {
    ++acc.tallies["r2_applications"];
    if (!remark_r2_filter(a)) fail("r2", "a_{k-4} != 2k-8");
  }
  if (a[k - 3] < 2 * k - 6 && a[k - 2] == 2 * k - 4) {
    ++acc.tallies["r1_applications"];
    const auto catalog = remark_r1_catalog(k);
    if (std::find(catalog.begin(), catalog.end(), a) == catalog.end()) {
      acc.observations.push_back({"extremal", "r1 catalog does not list this set", lit, ""});
    }
  }
  if (k < 5) return;
  const auto w = witness_profile(a);
  if (w.W.size() != 2) {
    ++acc.tallies["decomposition_skipped_W_ne_2"];
    return;
  }
  ++acc.tallies["decompositions"];
  try {
    const auto d = decompose(a, *w.w1, *w.w2);
    if (!d.reconstructs) fail("L4-2", "reconstruction " + to_literal(d.reconstruction));
    if (2 * static_cast<int>(d.U.size()) != d.m - 1) {
      fail("L4-3(i)", "|U|=" + std::to_string(d.U.size()) + " m=" + std::to_string(d.m));
    }
    if (!check_paired_residues(d)) fail("L4-3(ii)", "U=" + to_literal(d.U) + " m=" + std::to_string(d.m));
  } catch (const Error& ex) {
    fail("L4-2", ex.what());
  }
}

void split_checks(LemmaAcc& acc, const NormalizedSet& a) {
  ++acc.sets;
  const auto s = find_admissible_split(a);
  if (!s) {
    ++acc.tallies["no_split"];
    return;
  }
  ++acc.tallies["splits"];
  const auto t = split_at(a, *s);
  if (!t.overlap_matches) {
    acc.violations.push_back({"split", "overlap", to_literal(a), "s=" + std::to_string(*s) + " overlap=" + to_literal(t.overlap)});
  }
  if (!t.count_inequality) {
    acc.violations.push_back({"split", "count_inequality", to_literal(a), "s=" + std::to_string(*s)});
  }
}

Json violation_json(const Violation& v) {
  Json j{{"stage", v.stage}, {"check", v.check}, {"set", v.set}};
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

}  // namespace

Certificate sweep_lemmas(int k_min, int k_max, const RunOptions& opt) {
  if (k_min < 3 || k_max < k_min) throw Error("lemma sweep needs 3 <= k_min <= k_max");
  const auto start = Clock::now();
  Certificate c;
  c.claim = "lemma_suite";
  c.query = query_json("lemmas", k_min, k_max, kGcdOne, opt);
  c.query["stages"] = {
      {{"stage", "section2"}, {"k_min", std::max(3, k_min)}, {"constraints", constraint_names(kGcdOne | kGrowth | kLastGe2kMinus2)}},
      {{"stage", "witness"}, {"k_min", std::max(5, k_min)}, {"l_max", "2k-3"}},
      {{"stage", "extremal"}, {"k_min", std::max(4, k_min)}, {"l", "2k-3"}},
      {{"stage", "split"}, {"k_min", std::max(4, k_min)}, {"constraints", constraint_names(kGcdOne | kPenultimateLt2kMinus4 | kLastGe2kMinus2)}},
  };
  c.cap = cap_json(opt);
  c.counts = Json::object();

  bool truncated = false;
  Json violations = Json::array();
  Json observations = Json::array();
  Json per_stage = Json::object();

  auto stage = [&](const std::string& name, int k_lo, auto query_for, auto check) {
    Json rows = Json::array();
    std::uint64_t stage_sets = 0;
    for (int k = k_lo; k <= k_max; ++k) {
      std::vector<LemmaAcc> accs;
      const auto st = run_sharded(query_for(k), opt, accs, check);
      truncated = truncated || st.truncated;
      LemmaAcc total;
      for (auto& acc : accs) {
        total.sets += acc.sets;
        for (auto& v : acc.violations) total.violations.push_back(std::move(v));
        for (auto& v : acc.observations) total.observations.push_back(std::move(v));
        for (auto& [key, n] : acc.tallies) total.tallies[key] += n;
      }
      for (const auto& v : total.violations) {
        violations.push_back(violation_json(v));
        c.counterexamples.push_back(v.set);
      }
      for (const auto& v : total.observations) observations.push_back(violation_json(v));
      Json row{{"k", k}, {"sets", total.sets}, {"violations", total.violations.size()}};
      Json tallies = Json::object();
      for (const auto& [key, n] : total.tallies) tallies[key] = n;
      row["tallies"] = tallies;
      rows.push_back(row);
      stage_sets += total.sets;
    }
    per_stage[name] = rows;
    c.counts[name + "_sets"] = stage_sets;
  };

  stage("section2", std::max(3, k_min),
        [&](int k) { return make_query(k, 2 * k - 2, last_cap(opt, k), kGrowth | kLastGe2kMinus2, opt); },
        section2_checks);
  stage("witness", std::max(5, k_min), [&](int k) { return make_query(k, k - 1, 2 * k - 3, kGcdOne, opt); },
        witness_checks);
  stage("extremal", std::max(4, k_min),
        [&](int k) {
          auto q = make_query(k, 2 * k - 3, 2 * k - 3, kGcdOne, opt);
          q.custom = [k](const NormalizedSet& a) { return card2hat(a) == 3 * k - 7; };
          return q;
        },
        extremal_checks);
  stage("split", std::max(4, k_min),
        [&](int k) {
          return make_query(k, 2 * k - 2, last_cap(opt, k), kPenultimateLt2kMinus4 | kLastGe2kMinus2, opt);
        },
        split_checks);

  c.counts["violations"] = violations.size();
  c.counts["observations"] = observations.size();
  c.details["per_stage"] = per_stage;
  c.details["violations"] = violations;
  c.details["observations"] = observations;
  c.finalize(truncated);
  c.wall_time_ms = elapsed_ms(start);
  return c;
}

}  // namespace sumset
