#include "sumset/structure.hpp"

#include <algorithm>
#include <numeric>

#include "sumset/sumset.hpp"

namespace sumset {
namespace {

void require_growth(const NormalizedSet& a) {
  if (!satisfies_growth_hypotheses(a)) {
    throw Error("growth hypotheses not met (need k >= 3, a_i < 2i for i <= k-2, a_{k-1} >= 2k-2)");
  }
}

struct PrimeData {
  IntegerSet prime;       // A'
  IntegerSet restricted;  // 2^A'
  IntegerSet B;
};

PrimeData prime_data(const NormalizedSet& a) {
  PrimeData p{a.without_last(), {}, exceptional_set(a)};
  p.restricted = restricted_sumset(p.prime);
  return p;
}

// {start + step * i : i integer, lo_num/lo_den <= i <= hi_num/hi_den}, lo, hi may be fractional.
void add_progression(std::vector<int>& out, int start, int step, int lo_num, int lo_den, int hi_num,
                     int hi_den) {
  for (int i = 0; i * hi_den <= hi_num; ++i) {
    if (i * lo_den >= lo_num) out.push_back(start + step * i);
  }
}

void add_interval(std::vector<int>& out, int lo, int hi) {
  for (int x = lo; x <= hi; ++x) out.push_back(x);
}

bool equals_unsorted(const IntegerSet& s, std::vector<int> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return std::equal(s.begin(), s.end(), values.begin(), values.end());
}

IntegerSet prefix_upto(const IntegerSet& s, int hi) {
  std::vector<int> out;
  for (int x : s) {
    if (x > hi) break;
    out.push_back(x);
  }
  return IntegerSet(std::move(out), s.empty() ? 0 : s.max());
}

int count_in(const IntegerSet& s, int lo, int hi) {
  int n = 0;
  for (int x : s) n += (x >= lo && x <= hi) ? 1 : 0;
  return n;
}

// |{i, j} n S| as a set, so i == j counts once.
int pair_hits(const IntegerSet& s, int i, int j) {
  return i == j ? (s.contains(i) ? 1 : 0) : (s.contains(i) ? 1 : 0) + (s.contains(j) ? 1 : 0);
}

}  // namespace

bool satisfies_growth_hypotheses(const NormalizedSet& a) {
  const int k = a.k();
  if (k < 3) return false;
  for (int i = 1; i <= k - 2; ++i) {
    if (a[i] >= 2 * i) return false;
  }
  return a.l() >= 2 * k - 2;
}

ExceptionalProfile exceptional_profile(const NormalizedSet& a) {
  if (a.k() < 3) throw Error("exceptional profile needs k >= 3");
  const auto p = prime_data(a);
  ExceptionalProfile e;
  e.b_list = p.B;
  e.m = static_cast<int>(p.B.size());
  if (e.m >= 2) {
    const int bm1 = e.b(e.m - 1);
    std::vector<int> d;
    std::vector<int> c;
    for (int x = 1; x <= bm1; ++x) {
      (p.restricted.contains(2 * a.k() - 4 + x) ? d : c).push_back(x);
    }
    e.D = IntegerSet(std::move(d), bm1);
    e.C = IntegerSet(std::move(c), bm1);
  }
  return e;
}

bool check_L2_1(const NormalizedSet& a) {
  require_growth(a);
  const auto prime = a.without_last();
  const auto doubled = sumset(prime, prime);
  for (int x = 0; x <= 2 * a.k() - 4; ++x) {
    if (!doubled.contains(x)) return false;
  }
  return true;
}

std::vector<LemmaViolation> check_L2_2(const NormalizedSet& a) {
  require_growth(a);
  const int k = a.k();
  const auto p = prime_data(a);
  std::vector<LemmaViolation> out;
  for (int b : p.B) {
    if (p.prime.contains(b) || b % 2 != 0 || !p.prime.contains(b / 2)) {
      out.push_back({"i", b, "b in A', b odd, or b/2 not in A'"});
    }
    if (count_in(p.prime, 0, b) != b / 2 + 1) {
      out.push_back({"ii", b, "|[0,b] n A'| != b/2 + 1"});
    }
    for (int i = 0; i <= b / 2; ++i) {
      if (pair_hits(p.prime, i, b - i) != 1) {
        out.push_back({"ii", b, "|{" + std::to_string(i) + ", b-" + std::to_string(i) + "} n A'| != 1"});
        break;
      }
    }
    if (b < 2 * k - 4) {
      const int idx = b / 2 + 1;
      if (idx > k - 2 || a[static_cast<std::size_t>(idx)] != b + 1) {
        out.push_back({"iv", b, "a_{b/2+1} != b + 1"});
      }
    }
  }
  return out;
}

ClauseIiiResult check_L2_2_iii(const NormalizedSet& a) {
  require_growth(a);
  const int k = a.k();
  const auto p = prime_data(a);
  ClauseIiiResult res;
  const int m = static_cast<int>(p.B.size());
  for (int idx = 0; idx < m; ++idx) {
    const int b = p.B[static_cast<std::size_t>(idx)];
    const bool stated = b < k - 2;
    // Out-of-hypothesis applications follow the usage with b in B \ {b_m}.
    if (!stated && idx == m - 1) continue;
    for (int u = 1; u <= b; ++u) {
      if (p.restricted.contains(2 * k - 4 + u)) continue;
      (stated ? res.applications : res.out_of_hypothesis_applications)++;
      auto& sink = stated ? res.violations : res.out_of_hypothesis;
      const int expected = k - 2 + u / 2 - b;
      if (count_in(p.prime, b + 1, 2 * k - 5 + u - b) != expected) {
        sink.push_back({"iii", b, "count mismatch at u=" + std::to_string(u)});
        continue;
      }
      for (int i = b + 1; i <= k - 2 + u / 2; ++i) {
        if (pair_hits(p.prime, i, 2 * k - 4 + u - i) != 1) {
          sink.push_back({"iii", b, "pair mismatch at u=" + std::to_string(u) + ", i=" + std::to_string(i)});
          break;
        }
      }
    }
  }
  return res;
}

bool check_L2_3(const NormalizedSet& a) {
  require_growth(a);
  const auto e = exceptional_profile(a);
  for (int i = 0; i < e.m; ++i) {
    if (e.b(i + 1) < 2 * e.b(i) + 2) return false;
  }
  return true;
}

GapPatterns gap_patterns(const NormalizedSet& a) {
  const auto p = prime_data(a);
  const int m = static_cast<int>(p.B.size());
  if (m < 2) throw Error("window undefined (needs m >= 2)");
  const int k = a.k();
  GapPatterns g;
  g.window_lo = 2 * k - 3;
  g.window_hi = 2 * k - 4 + p.B[static_cast<std::size_t>(m - 2)];
  std::vector<int> missing;
  for (int x = g.window_lo; x <= g.window_hi; ++x) {
    if (!p.restricted.contains(x)) missing.push_back(x);
  }
  g.missing = IntegerSet(missing, g.window_hi);
  for (int x : missing) {
    g.has_consecutive = g.has_consecutive || g.missing.contains(x + 1);
    g.has_diff2 = g.has_diff2 || g.missing.contains(x + 2);
    g.has_diff3 = g.has_diff3 || g.missing.contains(x + 3);
  }
  return g;
}

bool matches_consecutive_exception(const NormalizedSet& a) {
  const auto p = prime_data(a);
  if (p.B.size() != 2) return false;
  const int b1 = p.B[0];
  const int b2 = p.B[1];
  std::vector<int> want;
  add_interval(want, 0, b1 / 2);
  add_interval(want, b1 + 1, 3 * b1 / 2 + 1);
  return equals_unsorted(prefix_upto(p.prime, b2), want);
}

std::optional<int> matches_diff3_exception(const NormalizedSet& a) {
  const auto p = prime_data(a);
  if (p.B.size() != 3 || p.B[0] != 2) return std::nullopt;
  const int b2 = p.B[1];
  const auto low = prefix_upto(p.prime, p.B[2]);
  std::vector<std::vector<int>> cases(7);
  // Each bound "i <= x/y" with fractional x/y is the integer bound y*i <= x.
  if (b2 % 3 == 2) {
    add_progression(cases[1], 0, 3, 0, 1, 2 * b2 + 2, 3);
    add_progression(cases[1], 1, 3, 0, 1, b2 - 2, 6);
    add_progression(cases[1], 1, 3, b2 + 1, 3, b2, 2);

    add_progression(cases[3], 0, 3, 0, 1, b2 + 2, 2);  // i <= b2/2 + 1
    add_progression(cases[3], 1, 3, 0, 1, b2 - 2, 6);
    add_progression(cases[3], b2 + 3, 3, 0, 1, b2 + 1, 3);

    add_progression(cases[6], 0, 3, 0, 1, 2 * b2 + 5, 3);
    add_progression(cases[6], 2, 3, 0, 1, b2 - 2, 6);
    add_progression(cases[6], 2, 3, b2 + 1, 3, b2, 2);
  }
  if (b2 % 3 == 0) {
    add_progression(cases[2], 0, 3, 0, 1, b2, 6);
    add_progression(cases[2], 1, 3, 0, 1, b2, 2);
    add_progression(cases[2], b2 + 2, 3, 0, 1, b2, 3);

    add_progression(cases[5], 0, 3, 0, 1, b2, 6);
    add_progression(cases[5], 0, 3, b2 + 3, 3, b2 + 2, 2);  // b2/3 + 1 <= i <= b2/2 + 1
    add_progression(cases[5], 1, 3, 0, 1, 2 * b2 + 3, 3);
  }
  if (b2 % 3 == 1) {
    add_progression(cases[4], 0, 3, 0, 1, b2 + 2, 6);
    add_progression(cases[4], b2 + 3, 3, 0, 1, b2 + 2, 3);
    add_progression(cases[4], 2, 3, 0, 1, b2, 2);
  }
  for (int c = 1; c <= 6; ++c) {
    if (!cases[static_cast<std::size_t>(c)].empty() && equals_unsorted(low, cases[static_cast<std::size_t>(c)])) {
      return c;
    }
  }
  return std::nullopt;
}

DCountCheck check_L2_7(const NormalizedSet& a) {
  const auto e = exceptional_profile(a);
  if (e.m < 2) throw Error("window undefined (needs m >= 2)");
  DCountCheck r;
  r.b = e.b(e.m - 1);
  r.d_count = static_cast<int>(e.D.size());
  r.required = r.b / 2 + r.b / 4;
  r.holds = r.d_count >= r.required;
  r.exceptional = matches_consecutive_exception(a) || matches_diff3_exception(a).has_value();
  return r;
}

std::string to_string(P4Case c) {
  switch (c) {
    case P4Case::i: return "i";
    case P4Case::ii: return "ii";
    case P4Case::iii: return "iii";
    case P4Case::none: break;
  }
  return "none";
}

P4Result check_P4(const NormalizedSet& a) {
  const auto p = prime_data(a);
  const int m = static_cast<int>(p.B.size());
  if (m < 2) throw Error("window undefined (needs m >= 2)");
  const int k = a.k();
  const int bm1 = p.B[static_cast<std::size_t>(m - 2)];
  P4Result r;
  r.both_missing = !p.restricted.contains(2 * k - 3 + bm1) && !p.restricted.contains(2 * k - 2 + bm1);

  if (m == 2) {
    auto try_case = [&](P4Case c, std::vector<int> prime, std::vector<int> b) {
      if (r.structure == P4Case::none && equals_unsorted(p.prime, std::move(prime)) &&
          equals_unsorted(p.B, std::move(b))) {
        r.structure = c;
      }
    };
    if (k % 2 == 1) {
      std::vector<int> s;
      add_interval(s, 0, (k - 3) / 2);
      add_interval(s, k - 2, 3 * (k - 3) / 2 + 1);
      try_case(P4Case::i, s, {k - 3, 2 * k - 4});
    }
    if (k % 3 == 0) {
      std::vector<int> s;
      add_interval(s, 0, (k - 3) / 3);
      add_interval(s, (2 * k - 3) / 3, k - 2);
      add_interval(s, (4 * k - 6) / 3, (5 * k - 12) / 3);
      try_case(P4Case::ii, s, {(2 * k - 6) / 3, 2 * k - 4});
    }
    if (k % 3 == 1) {
      std::vector<int> s;
      add_interval(s, 0, (k - 4) / 3);
      add_interval(s, (2 * k - 5) / 3, k - 3);
      add_interval(s, (4 * k - 7) / 3, (5 * k - 11) / 3);
      try_case(P4Case::iii, s, {(2 * k - 8) / 3, (4 * k - 10) / 3});
    }
  }
  r.matches = r.both_missing && r.structure != P4Case::none;
  return r;
}

WitnessProfile witness_profile(const NormalizedSet& a) {
  const int top = a.l();
  const auto restricted = restricted_sumset(a.set());
  std::vector<int> w;
  for (int x = 0; x <= top; ++x) {
    if (!a.set().contains(x) && !restricted.contains(x) && !restricted.contains(x + top)) w.push_back(x);
  }
  WitnessProfile p;
  p.W = IntegerSet(w, top);
  if (w.size() == 2) {
    p.w1 = w[0];
    p.w2 = w[1];
    p.m = std::gcd(w[1] - w[0], top);
  }
  return p;
}

Decomposition decompose(const NormalizedSet& a, int w1, int w2) {
  const auto wp = witness_profile(a);
  if (!(w1 < w2) || !wp.W.contains(w1) || !wp.W.contains(w2)) {
    throw Error("w1, w2 are not witnesses of this set");
  }
  const int top = a.l();
  Decomposition d;
  d.w1 = w1;
  d.w2 = w2;
  d.m = std::gcd(w2 - w1, top);
  for (int x : {w2, w2 + top}) {
    if (x % 2 == 0) d.V.push_back(x / 2);
  }
  if (d.V.empty()) throw Error("no valid v");
  d.v = d.V.front();

  std::vector<int> h;
  for (int x = 0; x < top; x += d.m) h.push_back(x);
  d.H = IntegerSet(std::move(h), top);

  // x <= a_{k-1}/(2m) - 1/2  <=>  2m x <= a_{k-1} - m
  d.x_max = (top - d.m) / (2 * d.m);
  const int step = w2 - w1;
  std::vector<int> dminus;
  for (int v : d.V) {
    auto& rows = d.rv_table[v];
    for (int x = 0; x <= d.x_max; ++x) {
      const long long raw = static_cast<long long>(v) + static_cast<long long>(x) * step;
      const int q = static_cast<int>(raw / top);
      const int r = static_cast<int>(raw - static_cast<long long>(q) * top);
      rows.emplace_back(r, q);
      dminus.push_back(r);
    }
  }
  d.Dminus = IntegerSet::from_unsorted(dminus, top);

  std::vector<int> u;
  for (int x = 0; x < d.m; ++x) {
    if (a.set().contains(x) && ((2 * x - w2) % d.m + d.m) % d.m != 0) u.push_back(x);
  }
  d.U = IntegerSet(u, top);

  std::vector<int> rec{top};
  for (int uu : d.U) {
    for (int hh : d.H) rec.push_back(uu + hh);
  }
  rec.insert(rec.end(), d.Dminus.begin(), d.Dminus.end());
  d.reconstruction = IntegerSet::from_unsorted(rec, 2 * top);
  d.reconstructs = d.reconstruction == a.set();
  return d;
}

bool check_paired_residues(const Decomposition& d) {
  const int m = d.m;
  const int target = ((d.w2 % m) + m) % m;
  for (int u1 = 0; u1 < m; ++u1) {
    const int u2 = ((target - u1) % m + m) % m;
    if (u2 <= u1) continue;
    if (d.U.contains(u1) == d.U.contains(u2)) return false;
  }
  return true;
}

SplitTriple split_at(const NormalizedSet& a, int s) {
  const int k = a.k();
  if (s < 2 || s > k - 2 || a[static_cast<std::size_t>(s - 1)] != 2 * s - 2 ||
      a[static_cast<std::size_t>(s)] != 2 * s - 1) {
    throw Error("no admissible split at s = " + std::to_string(s));
  }
  const auto e = a.elements();
  const auto us = static_cast<std::size_t>(s);
  std::vector<int> low(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(us + 2));
  std::vector<int> high(e.begin() + static_cast<std::ptrdiff_t>(us - 1), e.end());
  std::vector<int> high_star(high);
  for (int& x : high_star) x -= high.front();

  SplitTriple t{s,
                NormalizedSet::of(std::move(low)),
                IntegerSet(std::move(high), a.l()),
                NormalizedSet::of(std::move(high_star)),
                0,
                0,
                {},
                {},
                false,
                false};
  t.k1 = t.A1.k();
  t.k2 = static_cast<int>(t.A2.size());
  const auto r1 = restricted_sumset(t.A1.set());
  const auto r2 = restricted_sumset(t.A2);
  t.overlap = set_intersection(r1, r2);
  const int p = a[us - 1];
  const int q = a[us];
  const int r = a[us + 1];
  t.expected_overlap = IntegerSet::from_unsorted({p + q, p + r, q + r}, 2 * a.l());
  t.overlap_matches = t.overlap == t.expected_overlap;
  t.count_inequality = restricted_sumset_size(a.set()) + 3 >= r1.size() + r2.size();
  return t;
}

std::optional<int> find_admissible_split(const NormalizedSet& a) {
  const int k = a.k();
  if (k < 4 || a[static_cast<std::size_t>(k - 2)] >= 2 * k - 4 || a.l() < 2 * k - 2) return std::nullopt;
  int last_large = 0;
  for (int i = 1; i <= k - 3; ++i) {
    if (a[static_cast<std::size_t>(i)] >= 2 * i) last_large = i;
  }
  if (last_large == 0) return std::nullopt;
  return last_large + 1;
}

}  // namespace sumset
