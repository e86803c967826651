// Naive reference implementations used as test oracles. Deliberately written
// without the library: plain loops over std::set and std::vector.
#ifndef SUMSET_TESTS_ORACLE_HPP
#define SUMSET_TESTS_ORACLE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<int>;

inline Vec sorted(const std::set<int>& s) { return Vec(s.begin(), s.end()); }

inline Vec sumset(const Vec& a, const Vec& b) {
  std::set<int> out;
  for (int x : a) {
    for (int y : b) out.insert(x + y);
  }
  return sorted(out);
}

inline Vec restricted(const Vec& a) {
  std::set<int> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) out.insert(a[i] + a[j]);
  }
  return sorted(out);
}

inline int euclid(int x, int y) {
  while (y != 0) {
    const int r = x % y;
    x = y;
    y = r;
  }
  return x;
}

inline int gcd_all(const Vec& a) {
  int g = 0;
  for (int x : a) g = euclid(x, g);
  return g;
}

inline std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= r; ++i) c = c * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return c;
}

// Every {0 < ... < l} with k elements and gcd 1, by walking combinations of the
// interior [1, l-1] in lexicographic order.
template <class Fn>
void for_each_normalized(int k, int l, Fn fn) {
  const int r = k - 2;
  if (r < 0 || l < k - 1) return;
  Vec idx(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    Vec a{0};
    a.insert(a.end(), idx.begin(), idx.end());
    a.push_back(l);
    if (gcd_all(a) == 1) fn(a);
    int i = r - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == l - 1 - (r - 1 - i)) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

inline std::vector<Vec> normalized_sets(int k, int l) {
  std::vector<Vec> out;
  for_each_normalized(k, l, [&](const Vec& a) { out.push_back(a); });
  return out;
}

inline bool is_ap(const Vec& p, int d) {
  for (std::size_t i = 1; i < p.size(); ++i) {
    if (p[i] - p[i - 1] != d) return false;
  }
  return true;
}

// Minimal d over all bipartitions A = P1 u P2 (P2 possibly empty) where every part with
// two or more elements is an AP of difference d.
inline std::optional<int> two_ap_bipartition(const Vec& a) {
  const int n = static_cast<int>(a.size());
  std::optional<int> best;
  for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
    Vec p1{a[0]};
    Vec p2;
    for (int i = 1; i < n; ++i) ((mask >> (i - 1)) & 1U ? p2 : p1).push_back(a[static_cast<std::size_t>(i)]);
    std::optional<int> d;
    bool ok = true;
    for (const Vec* p : {&p1, &p2}) {
      if (p->size() < 2) continue;
      const int dp = (*p)[1] - (*p)[0];
      if (!is_ap(*p, dp) || (d && *d != dp)) {
        ok = false;
        break;
      }
      d = dp;
    }
    if (!ok) continue;
    const int cand = d.value_or(1);
    if (!best || cand < *best) best = cand;
  }
  return best;
}

inline bool contains(const Vec& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

// W = {w in [0, l] \ A : w, w + l not in 2^A}
inline Vec witnesses(const Vec& a) {
  const int l = a.back();
  const Vec r = restricted(a);
  Vec w;
  for (int x = 0; x <= l; ++x) {
    if (!contains(a, x) && !contains(r, x) && !contains(r, x + l)) w.push_back(x);
  }
  return w;
}

// B = [1, 2k-4] \ 2^A'
inline Vec exceptional(const Vec& a) {
  const int k = static_cast<int>(a.size());
  const Vec r = restricted(Vec(a.begin(), a.end() - 1));
  Vec b;
  for (int x = 1; x <= 2 * k - 4; ++x) {
    if (!contains(r, x)) b.push_back(x);
  }
  return b;
}

// Distinct values drawn uniformly from [0, max_value], sorted.
inline Vec random_set(std::mt19937_64& rng, int max_k, int max_value, int min_k = 1) {
  std::uniform_int_distribution<int> size_dist(min_k, max_k);
  std::uniform_int_distribution<int> value_dist(0, max_value);
  const int k = size_dist(rng);
  std::set<int> s;
  while (static_cast<int>(s.size()) < k) s.insert(value_dist(rng));
  return sorted(s);
}

}  // namespace oracle

#endif  // SUMSET_TESTS_ORACLE_HPP
