#include "sumset/families.hpp"

#include <algorithm>
#include <array>

#include "sumset/structure.hpp"
#include "sumset/sumset.hpp"

namespace sumset {
namespace {

constexpr std::array<std::pair<FamilyKind, std::string_view>, 8> kKindNames{{
    {FamilyKind::t2_mod0, "t2_mod0"},
    {FamilyKind::t2_mod1, "t2_mod1"},
    {FamilyKind::t3_interval, "t3_interval"},
    {FamilyKind::t3_parity, "t3_parity"},
    {FamilyKind::t3_mod3_pair, "t3_mod3_pair"},
    {FamilyKind::t3_four, "t3_four"},
    {FamilyKind::t3_mod3_shift, "t3_mod3_shift"},
    {FamilyKind::t3_sporadic, "t3_sporadic"},
}};

NormalizedSet checked(std::vector<int> values, int k, int expected_max, std::string_view what) {
  auto s = IntegerSet::from_unsorted(std::move(values));
  if (static_cast<int>(s.size()) != k || s.empty() || s.max() != expected_max || s.min() != 0) {
    throw Error(std::string(what) + " produced " + to_literal(s) + ", expected " + std::to_string(k) +
                " elements with maximum " + std::to_string(expected_max));
  }
  return NormalizedSet(std::move(s));
}

bool theta_in(const std::vector<int>& thetas, int theta) {
  return std::find(thetas.begin(), thetas.end(), theta) != thetas.end();
}

// Sporadic sets as listed, in listing order. Parametric rows are expanded separately.
const std::vector<std::vector<int>>& listed_sporadics() {
  static const std::vector<std::vector<int>> sets{
      {0, 1, 4, 5, 6, 9},
      {0, 3, 4, 5, 8, 9},
      {0, 1, 2, 5, 6, 7, 11},
      {0, 1, 3, 4, 7, 8, 11},
      {0, 1, 4, 5, 6, 10, 11},
      {0, 1, 4, 5, 7, 8, 11},
      {0, 1, 5, 6, 7, 10, 11},
      {0, 3, 4, 6, 7, 10, 11},
      {0, 3, 4, 7, 8, 10, 11},
      {0, 4, 5, 6, 9, 10, 11},
      {0, 1, 2, 6, 7, 8, 12, 13},
      {0, 1, 4, 5, 6, 9, 10, 13},
      {0, 1, 5, 6, 7, 8, 12, 13},
      {0, 1, 5, 6, 7, 11, 12, 13},
      {0, 2, 3, 5, 7, 8, 10, 13},
      {0, 2, 3, 5, 8, 10, 11, 13},
      {0, 3, 4, 7, 8, 9, 12, 13},
      {0, 3, 5, 6, 8, 10, 11, 13},
  };
  return sets;
}

const std::vector<std::vector<int>>& listed_sporadics_tail() {
  static const std::vector<std::vector<int>> sets{
      {0, 1, 2, 6, 7, 8, 9, 14, 15},
      {0, 1, 4, 5, 7, 8, 11, 12, 15},
      {0, 1, 6, 7, 8, 9, 13, 14, 15},
      {0, 3, 4, 7, 8, 10, 11, 14, 15},
      {0, 1, 2, 7, 8, 9, 10, 15, 16, 17},
      {0, 1, 5, 6, 7, 10, 11, 12, 16, 17},
      {0, 2, 3, 5, 7, 8, 10, 12, 15, 17},
      {0, 2, 5, 7, 9, 10, 12, 14, 15, 17},
      {0, 3, 4, 6, 10, 11, 13, 14, 17},
  };
  return sets;
}

const std::vector<std::vector<int>>& remark_r1_listed() {
  static const std::vector<std::vector<int>> sets{
      {0, 3, 4, 5, 8, 9},
      {0, 1, 4, 5, 6, 10, 11},
      {0, 1, 5, 6, 7, 10, 11},
      {0, 3, 4, 6, 7, 10, 11},
      {0, 1, 2, 6, 7, 8, 12, 13},
      {0, 1, 5, 6, 7, 8, 12, 13},
      {0, 3, 4, 7, 8, 9, 12, 13},
      {0, 1, 2, 6, 7, 8, 9, 14, 15},
      {0, 1, 4, 5, 6, 9, 10, 14, 15},
      {0, 1, 5, 6, 9, 10, 11, 14, 15},
      {0, 4, 5, 6, 9, 10, 11, 14, 15},
      {0, 3, 4, 7, 8, 10, 11, 14, 15},
      {0, 1, 5, 6, 7, 10, 11, 12, 16, 17},
  };
  return sets;
}

std::vector<SporadicEntry> build_catalog() {
  std::vector<SporadicEntry> out;
  auto push = [&](std::vector<int> values, std::string source) {
    auto set = normalize(IntegerSet::from_unsorted(std::move(values))).set;
    const bool dup = std::any_of(out.begin(), out.end(), [&](const auto& e) { return e.set == set; });
    if (dup) return;
    const bool consistent = set.l() == 2 * set.k() - 3;
    out.push_back({std::move(set), std::move(source), consistent});
  };
  for (const auto& s : listed_sporadics()) push(s, "listed");
  for (int theta = 1; theta <= 4; ++theta) {
    // {5i, 5i + theta, 15 : i = 0, 1, 2} plus a two-element tail
    std::vector<int> base{0, 5, 10, theta, 5 + theta, 10 + theta, 15};
    auto row1 = base;
    row1.insert(row1.end(), {5 - theta, 10 - theta});
    push(row1, "row1 theta=" + std::to_string(theta));
    auto row2 = base;
    row2.insert(row2.end(), {10 - theta, 15 - theta});
    push(row2, "row2 theta=" + std::to_string(theta));
  }
  for (const auto& s : listed_sporadics_tail()) push(s, "listed");
  return out;
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

FamilyKind parse_family_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  throw Error("unknown family kind '" + std::string(name) + "'");
}

const std::vector<FamilyKind>& all_family_kinds() {
  static const std::vector<FamilyKind> kinds = [] {
    std::vector<FamilyKind> v;
    for (const auto& [k, name] : kKindNames) v.push_back(k);
    return v;
  }();
  return kinds;
}

bool takes_theta(FamilyKind kind) {
  return kind == FamilyKind::t3_interval || kind == FamilyKind::t3_parity ||
         kind == FamilyKind::t3_mod3_pair || kind == FamilyKind::t3_mod3_shift;
}

std::vector<int> valid_thetas(FamilyKind kind, int k) {
  std::vector<int> out;
  if (k < 4) return out;
  switch (kind) {
    case FamilyKind::t3_interval:
      for (int t = k; t <= 2 * k - 4; ++t) out.push_back(t);
      break;
    case FamilyKind::t3_parity:
      for (int t = 1; t <= k - 3; ++t) out.push_back(t);
      break;
    case FamilyKind::t3_mod3_pair:
      if (k % 3 != 0) {
        // (k-3)/3 < theta < (2k-3)/3
        for (int t = 0; t <= k; ++t) {
          if (3 * t > k - 3 && 3 * t < 2 * k - 3) out.push_back(t);
        }
      }
      break;
    case FamilyKind::t3_mod3_shift:
      if (k % 3 == 0) {
        for (int t = 1; t <= k - 1; ++t) {
          if (t % 3 != 0) out.push_back(t);
        }
      }
      break;
    default:
      break;
  }
  return out;
}

FamilySpec FamilySpec::make(FamilyKind kind, int k, std::optional<int> theta, std::optional<int> sporadic_index) {
  const auto fail = [&](const std::string& why) -> FamilySpec {
    throw Error(std::string(to_string(kind)) + " at k = " + std::to_string(k) + ": " + why);
  };
  switch (kind) {
    case FamilyKind::t2_mod0:
      if (k < 6 || k % 3 != 0) return fail("no Theorem 2 family (needs k >= 6, k = 0 mod 3)");
      break;
    case FamilyKind::t2_mod1:
      if (k < 6 || k % 3 != 1) return fail("no Theorem 2 family (needs k >= 6, k = 1 mod 3)");
      break;
    case FamilyKind::t3_four:
      if (k < 4 || k % 2 != 0) return fail("needs even k >= 4");
      break;
    case FamilyKind::t3_sporadic: {
      const auto n = static_cast<int>(sporadics_for(k).size());
      if (!sporadic_index || *sporadic_index < 0 || *sporadic_index >= n) {
        return fail("sporadic index out of range (" + std::to_string(n) + " sets at this k)");
      }
      return FamilySpec(kind, k, std::nullopt, sporadic_index);
    }
    default:
      if (!theta) return fail("theta required");
      if (!theta_in(valid_thetas(kind, k), *theta)) {
        return fail("theta = " + std::to_string(*theta) + " out of range");
      }
      return FamilySpec(kind, k, theta, std::nullopt);
  }
  return FamilySpec(kind, k, std::nullopt, std::nullopt);
}

std::string FamilySpec::describe() const {
  std::string s(to_string(kind_));
  s += " k=" + std::to_string(k_);
  if (theta_) s += " theta=" + std::to_string(*theta_);
  if (sporadic_index_) s += " index=" + std::to_string(*sporadic_index_);
  return s;
}

NormalizedSet generate(const FamilySpec& spec) {
  const int k = spec.k();
  switch (spec.kind()) {
    case FamilyKind::t2_mod0:
    case FamilyKind::t2_mod1:
      return gen_theorem2(k);
    case FamilyKind::t3_interval:
      return gen_t3_interval(k, *spec.theta());
    case FamilyKind::t3_parity:
      return gen_t3_parity(k, *spec.theta());
    case FamilyKind::t3_mod3_pair:
      return gen_t3_mod3_pair(k, *spec.theta());
    case FamilyKind::t3_four:
      return gen_t3_four(k);
    case FamilyKind::t3_mod3_shift:
      return gen_t3_mod3_shift(k, *spec.theta());
    case FamilyKind::t3_sporadic:
      return sporadics_for(k).at(static_cast<std::size_t>(*spec.sporadic_index()));
  }
  throw Error("unknown family kind");
}

NormalizedSet gen_theorem2(int k) {
  if (k < 6 || k % 3 == 2) throw Error("no Theorem 2 family at k = " + std::to_string(k));
  std::vector<int> v;
  if (k % 3 == 0) {
    // ([0, k-3] n 3Z) u ([1, 2k-2] n (3Z+1))
    for (int x = 0; x <= k - 3; x += 3) v.push_back(x);
    for (int x = 1; x <= 2 * k - 2; x += 3) v.push_back(x);
  } else {
    // ([0, 2k-2] n 3Z) u ([1, k-3] n (3Z+1))
    for (int x = 0; x <= 2 * k - 2; x += 3) v.push_back(x);
    for (int x = 1; x <= k - 3; x += 3) v.push_back(x);
  }
  return checked(std::move(v), k, 2 * k - 2, "gen_theorem2");
}

NormalizedSet gen_t3_interval(int k, int theta) {
  if (!theta_in(valid_thetas(FamilyKind::t3_interval, k), theta)) {
    throw Error("t3_interval needs k >= 4 and k <= theta <= 2k-4");
  }
  std::vector<int> v;
  for (int x = 0; x <= theta - k + 1; ++x) v.push_back(x);
  for (int x = theta; x <= 2 * k - 3; ++x) v.push_back(x);
  return checked(std::move(v), k, 2 * k - 3, "gen_t3_interval");
}

NormalizedSet gen_t3_parity(int k, int theta) {
  if (!theta_in(valid_thetas(FamilyKind::t3_parity, k), theta)) {
    throw Error("t3_parity needs k >= 4 and 1 <= theta <= k-3");
  }
  std::vector<int> v;
  for (int i = 0; i <= theta; ++i) v.push_back(2 * i);
  for (int j = theta + 1; j <= k - 1; ++j) v.push_back(2 * j - 1);
  return checked(std::move(v), k, 2 * k - 3, "gen_t3_parity");
}

NormalizedSet gen_t3_mod3_pair(int k, int theta) {
  if (!theta_in(valid_thetas(FamilyKind::t3_mod3_pair, k), theta)) {
    throw Error("t3_mod3_pair needs 3 not dividing k and (k-3)/3 < theta < (2k-3)/3");
  }
  std::vector<int> v;
  for (int i = 0; i <= theta; ++i) v.push_back(3 * i);
  for (int j = theta + 1; j <= k - 1; ++j) v.push_back(3 * j - k);
  return checked(std::move(v), k, 2 * k - 3, "gen_t3_mod3_pair");
}

NormalizedSet gen_t3_four(int k) {
  if (k < 4 || k % 2 != 0) throw Error("t3_four needs even k >= 4");
  std::vector<int> v{0, 2 * k - 3};
  for (int i = 1; i <= (k - 2) / 2; ++i) {
    v.push_back(4 * i);
    v.push_back(4 * i - 3);
  }
  return checked(std::move(v), k, 2 * k - 3, "gen_t3_four");
}

NormalizedSet gen_t3_mod3_shift(int k, int theta) {
  if (!theta_in(valid_thetas(FamilyKind::t3_mod3_shift, k), theta)) {
    throw Error("t3_mod3_shift needs 3 | k, 1 <= theta <= k-1 and 3 not dividing theta");
  }
  std::vector<int> v;
  for (int i = 0; 3 * i <= 2 * k - 3; ++i) v.push_back(3 * i);
  for (int i = 0; 3 * i <= k - 3; ++i) v.push_back(theta + 3 * i);
  return checked(std::move(v), k, 2 * k - 3, "gen_t3_mod3_shift");
}

const std::vector<SporadicEntry>& sporadic_catalog() {
  static const std::vector<SporadicEntry> catalog = build_catalog();
  return catalog;
}

std::vector<NormalizedSet> sporadics_for(int k) {
  std::vector<NormalizedSet> out;
  for (const auto& e : sporadic_catalog()) {
    if (e.consistent && e.set.k() == k) out.push_back(e.set);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NormalizedSet> flagged_sporadics() {
  std::vector<NormalizedSet> out;
  for (const auto& e : sporadic_catalog()) {
    if (!e.consistent) out.push_back(e.set);
  }
  return out;
}

std::vector<FamilyMember> family_members(int k) {
  std::vector<FamilyMember> out;
  for (FamilyKind kind : all_family_kinds()) {
    if (kind == FamilyKind::t3_sporadic) {
      const auto n = static_cast<int>(sporadics_for(k).size());
      for (int i = 0; i < n; ++i) {
        auto spec = FamilySpec::make(kind, k, std::nullopt, i);
        out.push_back({spec, generate(spec)});
      }
    } else if (takes_theta(kind)) {
      for (int t : valid_thetas(kind, k)) {
        auto spec = FamilySpec::make(kind, k, t);
        out.push_back({spec, generate(spec)});
      }
    } else {
      const bool exists = (kind == FamilyKind::t2_mod0 && k >= 6 && k % 3 == 0) ||
                          (kind == FamilyKind::t2_mod1 && k >= 6 && k % 3 == 1) ||
                          (kind == FamilyKind::t3_four && k >= 4 && k % 2 == 0);
      if (exists) {
        auto spec = FamilySpec::make(kind, k);
        out.push_back({spec, generate(spec)});
      }
    }
  }
  return out;
}

std::vector<NormalizedSet> theorem3_union(int k) {
  std::vector<NormalizedSet> out;
  for (auto& member : family_members(k)) {
    if (member.spec.kind() != FamilyKind::t2_mod0 && member.spec.kind() != FamilyKind::t2_mod1) {
      out.push_back(std::move(member.set));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<NormalizedSet> remark_r1_catalog(int k) {
  std::vector<NormalizedSet> out;
  if (k >= 4) {
    std::vector<int> v;
    for (int x = 0; x <= k - 3; ++x) v.push_back(x);
    v.push_back(2 * k - 4);
    v.push_back(2 * k - 3);
    out.push_back(NormalizedSet::of(std::move(v)));
  }
  for (const auto& s : remark_r1_listed()) out.push_back(NormalizedSet::of(s));
  return out;
}

bool remark_r2_filter(const NormalizedSet& a) {
  const int k = a.k();
  if (k < 4 || a[static_cast<std::size_t>(k - 3)] != 2 * k - 6 || a[static_cast<std::size_t>(k - 2)] != 2 * k - 5 ||
      a.l() != 2 * k - 3) {
    throw Error("remark r2 needs a_{k-3} = 2k-6, a_{k-2} = 2k-5, a_{k-1} = 2k-3");
  }
  return a[static_cast<std::size_t>(k - 4)] == 2 * k - 8;
}

bool remark_2_1_shape(const NormalizedSet& a) {
  const int k = a.k();
  if (!satisfies_growth_hypotheses(a) || restricted_sumset_size(a.set()) != static_cast<std::size_t>(3 * k - 7)) {
    throw Error("shape formula needs a growth-hypothesis set with |2^A| = 3k-7");
  }
  std::vector<int> want;
  for (int x = 1; x <= 2 * k - 4; ++x) {
    if (x != 2 && x != 2 * k - 6) want.push_back(x);
  }
  for (std::size_t i = 0; i + 1 < a.elements().size(); ++i) want.push_back(a.l() + a[i]);
  return restricted_sumset(a.set()) == IntegerSet::from_unsorted(want, 4 * a.l());
}

}  // namespace sumset
