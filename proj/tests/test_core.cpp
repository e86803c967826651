#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "sumset/sumset.hpp"

using namespace sumset;
using V = std::vector<int>;

namespace {
V vec(const IntegerSet& s) { return V(s.begin(), s.end()); }
IntegerSet S(V v) { return IntegerSet(std::move(v)); }
}  // namespace

TEST_SUITE("core") {
  TEST_CASE("integer set construction and validation") {
    const auto s = S({0, 1, 4, 9});
    CHECK(s.size() == 4);
    CHECK(s.min() == 0);
    CHECK(s.max() == 9);
    CHECK(s.contains(4));
    CHECK_FALSE(s.contains(5));
    CHECK_FALSE(s.contains(-1));
    CHECK_FALSE(s.contains(100000));
    CHECK_THROWS_AS(S({1, 1}), Error);
    CHECK_THROWS_AS(S({3, 2}), Error);
    CHECK_THROWS_AS(S({-1, 2}), Error);
    CHECK_THROWS_AS(S({0, kDefaultMaxElement + 1}), Error);
    CHECK_NOTHROW(IntegerSet({0, 5000}, 6000));
    CHECK(vec(IntegerSet::from_unsorted({5, 1, 5, 3})) == V{1, 3, 5});
    CHECK(vec(IntegerSet::interval(2, 5)) == V{2, 3, 4, 5});
    CHECK(IntegerSet::interval(5, 2).empty());
    CHECK_THROWS_AS(IntegerSet().min(), Error);
  }

  TEST_CASE("normalized set invariants") {
    CHECK_NOTHROW(NormalizedSet::of({0, 1, 7}));
    CHECK_THROWS_AS(NormalizedSet::of({1, 2}), Error);     // min 1
    CHECK_THROWS_AS(NormalizedSet::of({0, 2, 4}), Error);  // gcd 2
    CHECK_THROWS_AS(NormalizedSet::of({0}), Error);        // k < 2
    const auto a = NormalizedSet::of({0, 1, 3, 4, 7, 10});
    CHECK(a.k() == 6);
    CHECK(a.l() == 10);
    CHECK(vec(a.without_last()) == V{0, 1, 3, 4, 7});
  }

  TEST_CASE("set literals round-trip") {
    CHECK(vec(parse_set_literal("{0,1,4,5,6,9}")) == V{0, 1, 4, 5, 6, 9});
    CHECK(vec(parse_set_literal(" { 0, 4 ,9 } ")) == V{0, 4, 9});
    CHECK_THROWS_AS(parse_set_literal("{9,0,4}"), Error);
    CHECK(vec(parse_set_literal("{}")).empty());
    CHECK(to_literal(S({0, 1, 4})) == "{0,1,4}");
    CHECK(to_literal(S({})) == "{}");
    CHECK_THROWS_AS(parse_set_literal("0,1,2"), Error);
    CHECK_THROWS_AS(parse_set_literal("{0,1,}"), Error);
    CHECK_THROWS_AS(parse_set_literal("{0,x}"), Error);
    CHECK_THROWS_AS(parse_set_literal("{0,-3}"), Error);
    CHECK_THROWS_AS(parse_set_literal("{0,1,1}"), Error);
    CHECK_THROWS_AS(parse_set_literal("{0,99999}"), Error);
  }

  TEST_CASE("set algebra") {
    const auto a = S({0, 1, 4, 6});
    const auto b = S({1, 2, 6});
    CHECK(vec(set_union(a, b)) == V{0, 1, 2, 4, 6});
    CHECK(vec(set_intersection(a, b)) == V{1, 6});
    CHECK(vec(set_difference(a, b)) == V{0, 4});
    CHECK(is_subset(S({1, 6}), a));
    CHECK_FALSE(is_subset(b, a));
    CHECK(vec(translate(a, 3)) == V{3, 4, 7, 9});
    CHECK(vec(translate(S({2, 5}), -2)) == V{0, 3});
    CHECK_THROWS_AS(translate(a, -1), Error);
    CHECK(gcd_of(V{0, 6, 9, 15}) == 3);
    CHECK(gcd_of(V{0}) == 0);
  }

  TEST_CASE("sumset small cases") {
    CHECK(vec(sumset::sumset(S({0}), S({0, 1, 5}))) == V{0, 1, 5});
    CHECK(vec(sumset::sumset(S({0, 1}), S({0, 1}))) == V{0, 1, 2});
    CHECK_THROWS_WITH_AS(sumset::sumset(S({}), S({0})), "empty set", Error);
    // value pinned from the naive double loop
    const auto twoA = sumset::sumset(S({0, 1, 3, 4, 7, 10}), S({0, 1, 3, 4, 7, 10}));
    CHECK(vec(twoA) == V{0, 1, 2, 3, 4, 5, 6, 7, 8, 10, 11, 13, 14, 17, 20});
    CHECK(twoA.size() == 15);
    CHECK(vec(twoA) == oracle::sumset({0, 1, 3, 4, 7, 10}, {0, 1, 3, 4, 7, 10}));
  }

  TEST_CASE("restricted sumset small cases") {
    for (int a2 = 2; a2 < 40; ++a2) {
      CHECK(vec(restricted_sumset(S({0, 1, a2}))) == V{1, a2, a2 + 1});
    }
    CHECK(vec(restricted_sumset(S({0, 1}))) == V{1});
    CHECK_THROWS_WITH_AS(restricted_sumset(S({3})), "need at least two elements", Error);
    const auto r = restricted_sumset(S({0, 1, 4, 5, 6, 9}));
    CHECK(vec(r) == V{1, 4, 5, 6, 7, 9, 10, 11, 13, 14, 15});
    CHECK(r.size() == 11);
    CHECK(restricted_sumset_size(S({0, 1, 4, 5, 6, 9})) == 11);
    CHECK(vec(restricted_sumset(S({0, 1, 3, 4, 7, 10}))) == V{1, 3, 4, 5, 7, 8, 10, 11, 13, 14, 17});
  }

  TEST_CASE("kernels cross word boundaries") {
    // values straddling 64-bit words exercise the shifted-word path
    const V a{0, 63, 64, 65, 127, 128, 200, 511};
    CHECK(vec(sumset::sumset(S(a), S(a))) == oracle::sumset(a, a));
    CHECK(vec(restricted_sumset(S(a))) == oracle::restricted(a));
    const V b{1, 62, 130};
    CHECK(vec(sumset::sumset(S(a), S(b))) == oracle::sumset(a, b));
  }

  TEST_CASE("normalize") {
    auto n = normalize(S({3, 5, 9}));
    CHECK(vec(n.set.set()) == V{0, 1, 3});
    CHECK(n.offset == 3);
    CHECK(n.scale == 2);
    n = normalize(S({0, 1, 7}));
    CHECK(vec(n.set.set()) == V{0, 1, 7});
    CHECK(n.offset == 0);
    CHECK(n.scale == 1);
    n = normalize(S({10, 20, 30, 50}));
    CHECK(vec(n.set.set()) == V{0, 1, 2, 4});
    CHECK(n.offset == 10);
    CHECK(n.scale == 10);
    CHECK_THROWS_AS(normalize(S({4})), Error);
  }

  TEST_CASE("reflect") {
    CHECK(vec(reflect(NormalizedSet::of({0, 1, 3})).set()) == V{0, 2, 3});
    CHECK(vec(reflect(NormalizedSet::of({0, 1, 2})).set()) == V{0, 1, 2});
    const auto a = NormalizedSet::of({0, 1, 4, 5, 6, 9});
    CHECK(restricted_sumset_size(reflect(a).set()) == restricted_sumset_size(a.set()));
    CHECK(reflect(reflect(a)) == a);
  }

  TEST_CASE("profile and exceptional set") {
    const auto p = profile(NormalizedSet::of({0, 1, 3, 4, 7, 10}));
    REQUIRE(p.exceptional.has_value());
    CHECK(vec(*p.exceptional) == V{2, 6});
    CHECK(vec(*p.exceptional) == oracle::exceptional({0, 1, 3, 4, 7, 10}));
    CHECK(p.doubled.size() == 15);
    CHECK(p.restricted.size() == 11);

    // interval [0,5]: 2^[0,4] = [1,7], so 8 is missing
    CHECK(vec(exceptional_set(NormalizedSet::of({0, 1, 2, 3, 4, 5}))) == V{8});
    CHECK(vec(exceptional_set(NormalizedSet::of({0, 1, 2, 3, 4, 5}))) == oracle::exceptional({0, 1, 2, 3, 4, 5}));

    const auto small = profile(NormalizedSet::of({0, 1}));
    CHECK_FALSE(small.exceptional.has_value());
    CHECK(vec(small.restricted) == V{1});
    CHECK_THROWS_AS(exceptional_set(NormalizedSet::of({0, 1})), Error);
  }
}
