#include <map>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "sumset/families.hpp"
#include "sumset/structure.hpp"
#include "sumset/sumset.hpp"

using namespace sumset;
using V = std::vector<int>;

namespace {
V vec(const NormalizedSet& s) { return V(s.elements().begin(), s.elements().end()); }
NormalizedSet N(V v) { return NormalizedSet::of(std::move(v)); }
int card(const NormalizedSet& s) { return static_cast<int>(oracle::restricted(vec(s)).size()); }
}  // namespace

TEST_SUITE("families") {
  TEST_CASE("Theorem 2 family") {
    CHECK(vec(gen_theorem2(6)) == V{0, 1, 3, 4, 7, 10});
    CHECK(vec(gen_theorem2(7)) == V{0, 1, 3, 4, 6, 9, 12});
    for (int k : {6, 7, 9, 10, 12, 13, 15, 16}) {
      const auto a = gen_theorem2(k);
      CHECK(a.k() == k);
      CHECK(a.l() == 2 * k - 2);
      CHECK(card(a) == 3 * k - 7);
      CHECK(satisfies_growth_hypotheses(a));
    }
    for (int k : {3, 4, 5, 8, 11}) CHECK_THROWS_WITH_AS(gen_theorem2(k), doctest::Contains("no Theorem 2 family"), Error);
  }

  TEST_CASE("interval family") {
    CHECK(vec(gen_t3_interval(4, 4)) == V{0, 1, 4, 5});
    CHECK(vec(gen_t3_interval(5, 6)) == V{0, 1, 2, 6, 7});
    CHECK_THROWS_AS(gen_t3_interval(5, 4), Error);
    CHECK_THROWS_AS(gen_t3_interval(5, 7), Error);
    CHECK_THROWS_AS(gen_t3_interval(3, 3), Error);
  }

  TEST_CASE("parity family") {
    CHECK(vec(gen_t3_parity(5, 1)) == V{0, 2, 3, 5, 7});
    CHECK(vec(gen_t3_parity(6, 3)) == V{0, 2, 4, 6, 7, 9});
    CHECK_THROWS_AS(gen_t3_parity(6, 0), Error);
    CHECK_THROWS_AS(gen_t3_parity(6, 4), Error);
  }

  TEST_CASE("mod 3 pair family") {
    CHECK(vec(gen_t3_mod3_pair(5, 2)) == V{0, 3, 4, 6, 7});
    CHECK(vec(gen_t3_mod3_pair(7, 3)) == V{0, 3, 5, 6, 8, 9, 11});
    CHECK_THROWS_AS(gen_t3_mod3_pair(6, 2), Error);  // 3 | k
    CHECK_THROWS_AS(gen_t3_mod3_pair(7, 1), Error);  // theta <= (k-3)/3
    CHECK_THROWS_AS(gen_t3_mod3_pair(7, 4), Error);  // theta >= (2k-3)/3
  }

  TEST_CASE("four family") {
    CHECK(vec(gen_t3_four(6)) == V{0, 1, 4, 5, 8, 9});
    CHECK(vec(gen_t3_four(4)) == V{0, 1, 4, 5});
    CHECK_THROWS_AS(gen_t3_four(7), Error);
    CHECK_THROWS_AS(gen_t3_four(2), Error);
  }

  TEST_CASE("mod 3 shift family") {
    CHECK(vec(gen_t3_mod3_shift(6, 1)) == V{0, 1, 3, 4, 6, 9});
    CHECK(vec(gen_t3_mod3_shift(6, 5)) == V{0, 3, 5, 6, 8, 9});
    CHECK_THROWS_AS(gen_t3_mod3_shift(6, 3), Error);
    CHECK_THROWS_AS(gen_t3_mod3_shift(7, 1), Error);
    CHECK_THROWS_AS(gen_t3_mod3_shift(6, 6), Error);
  }

  TEST_CASE("every family member is extremal and well formed") {
    for (int k = 4; k <= 12; ++k) {
      for (const auto& m : family_members(k)) {
        INFO(m.spec.describe());
        const bool t2 = m.spec.kind() == FamilyKind::t2_mod0 || m.spec.kind() == FamilyKind::t2_mod1;
        CHECK(m.set.k() == k);
        CHECK(m.set.l() == (t2 ? 2 * k - 2 : 2 * k - 3));
        CHECK(oracle::gcd_all(vec(m.set)) == 1);
        CHECK(card(m.set) == 3 * k - 7);
        CHECK(generate(m.spec) == m.set);
      }
    }
  }

  TEST_CASE("distinct parameters give distinct sets within a kind") {
    for (int k = 4; k <= 12; ++k) {
      std::map<FamilyKind, std::set<V>> seen;
      std::map<FamilyKind, int> count;
      for (const auto& m : family_members(k)) {
        seen[m.spec.kind()].insert(vec(m.set));
        ++count[m.spec.kind()];
      }
      for (const auto& [kind, sets] : seen) CHECK(static_cast<int>(sets.size()) == count[kind]);
    }
  }

  TEST_CASE("overlapping families keep their own members") {
    const auto four = family_members(4);
    int hits = 0;
    for (const auto& m : four) hits += vec(m.set) == V{0, 1, 4, 5} ? 1 : 0;
    CHECK(hits == 2);  // interval theta = 4 and the four family
    CHECK(theorem3_union(4).size() == 2);
  }

  TEST_CASE("family spec validation") {
    CHECK_THROWS_AS(FamilySpec::make(FamilyKind::t3_interval, 6), Error);  // theta missing
    CHECK_THROWS_AS(FamilySpec::make(FamilyKind::t3_interval, 6, 5), Error);
    CHECK_NOTHROW(FamilySpec::make(FamilyKind::t3_interval, 6, 6));
    CHECK_THROWS_AS(FamilySpec::make(FamilyKind::t3_sporadic, 6, std::nullopt, 2), Error);
    CHECK(vec(generate(FamilySpec::make(FamilyKind::t3_sporadic, 6, std::nullopt, 0))) == V{0, 1, 4, 5, 6, 9});
    CHECK(parse_family_kind("t3_mod3_shift") == FamilyKind::t3_mod3_shift);
    CHECK_THROWS_AS(parse_family_kind("t4"), Error);
    for (auto kind : all_family_kinds()) CHECK(parse_family_kind(to_string(kind)) == kind);
    CHECK(FamilySpec::make(FamilyKind::t3_parity, 6, 2).describe() == "t3_parity k=6 theta=2");
  }

  TEST_CASE("sporadic catalog") {
    const auto& cat = sporadic_catalog();
    auto has = [&](const V& v) {
      return std::any_of(cat.begin(), cat.end(), [&](const SporadicEntry& e) { return vec(e.set) == v; });
    };
    CHECK(has({0, 1, 4, 5, 6, 9}));
    CHECK(has({0, 3, 4, 5, 8, 9}));
    CHECK(has({0, 2, 3, 5, 7, 8, 10, 12, 15}));  // first parametric row at theta = 2
    std::set<V> unique;
    for (const auto& e : cat) {
      unique.insert(vec(e.set));
      if (e.consistent) {
        CHECK(e.set.l() == 2 * e.set.k() - 3);
        CHECK(card(e.set) == 3 * e.set.k() - 7);
      }
    }
    CHECK(unique.size() == cat.size());
    const auto flagged = flagged_sporadics();
    REQUIRE(flagged.size() == 1);
    CHECK(vec(flagged[0]) == V{0, 3, 4, 6, 10, 11, 13, 14, 17});
    CHECK(card(flagged[0]) == 23);
    CHECK(sporadics_for(6).size() == 2);
  }

  TEST_CASE("Remark r1 catalog") {
    const auto r5 = remark_r1_catalog(5);
    CHECK(vec(r5.front()) == V{0, 1, 2, 6, 7});
    CHECK(r5.size() == 14);
    CHECK(std::find(r5.begin(), r5.end(), N({0, 3, 4, 5, 8, 9})) != r5.end());
  }

  TEST_CASE("Remark r2 filter") {
    // a_{k-3} = 2k-6, a_{k-2} = 2k-5, a_{k-1} = 2k-3 at k = 6: {.., 6, 7, 9}
    CHECK(remark_r2_filter(N({0, 2, 4, 6, 7, 9})));
    CHECK_FALSE(remark_r2_filter(N({0, 1, 3, 6, 7, 9})));
    CHECK_THROWS_AS(remark_r2_filter(N({0, 1, 4, 5, 6, 9})), Error);
  }

  TEST_CASE("Remark 2.1 shape") {
    CHECK(remark_2_1_shape(gen_theorem2(6)));
    CHECK(remark_2_1_shape(gen_theorem2(7)));
    CHECK(oracle::restricted({0, 1, 3, 4, 7, 10}) == V{1, 3, 4, 5, 7, 8, 10, 11, 13, 14, 17});
    CHECK_THROWS_AS(remark_2_1_shape(N({0, 1, 3, 4, 7, 11})), Error);  // not extremal
    CHECK_THROWS_AS(remark_2_1_shape(N({0, 1, 4, 5, 6, 9})), Error);   // outside the regime
  }
}
