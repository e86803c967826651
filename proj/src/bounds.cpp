#include "sumset/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "sumset/sumset.hpp"

namespace sumset {
namespace {

__extension__ typedef __int128 i128;

std::int64_t isqrt_floor(i128 n) {
  if (n <= 0) return 0;
  auto x = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return static_cast<std::int64_t>(x);
}

// Sign of x + y sqrt5, exactly.
int sign_with_sqrt5(i128 x, i128 y) {
  if (x >= 0 && y >= 0) return (x == 0 && y == 0) ? 0 : 1;
  if (x <= 0 && y <= 0) return -1;
  const i128 x2 = x * x;
  const i128 y2 = 5 * y * y;
  if (x > 0) return x2 > y2 ? 1 : -1;  // y < 0; x2 == y2 impossible for y != 0
  return y2 > x2 ? 1 : -1;
}

i128 floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void check_kl(int k, int l) {
  if (k < 3) throw Error("bound needs k >= 3");
  if (l < k - 1) throw Error("no k-element set fits in [0, l] when l < k - 1");
}

std::string micro_to_string(std::int64_t micro) {
  std::ostringstream os;
  const bool neg = micro < 0;
  const std::int64_t mag = neg ? -micro : micro;
  os << (neg ? "-" : "") << mag / 1000000 << '.' << std::setw(6) << std::setfill('0')
     << mag % 1000000;
  return os.str();
}

}  // namespace

ExactBound ExactBound::with_sqrt5(std::int64_t twice_rational, std::int64_t sqrt5_coeff) {
  return ExactBound(twice_rational, sqrt5_coeff);
}

bool ExactBound::satisfied_by(std::int64_t n) const {
  return sign_with_sqrt5(static_cast<i128>(2 * n) - twice_rational_, -static_cast<i128>(sqrt5_coeff_)) >= 0;
}

std::pair<std::int64_t, std::int64_t> ExactBound::enclosure_micro() const {
  constexpr i128 kScale = 1000000;
  const i128 c = sqrt5_coeff_;
  const std::int64_t s = isqrt_floor(5 * c * c * kScale * kScale);
  // |c| sqrt5 * 1e6 lies in [s, s + 1].
  i128 lo2 = static_cast<i128>(twice_rational_) * kScale;
  i128 hi2 = lo2;
  if (c > 0) {
    lo2 += s;
    hi2 += s + (sqrt5_coeff_ != 0 ? 1 : 0);
  } else if (c < 0) {
    lo2 -= s + 1;
    hi2 -= s;
  }
  const i128 lo = floor_div(lo2, 2);
  const i128 hi = -floor_div(-hi2, 2);
  return {static_cast<std::int64_t>(lo), static_cast<std::int64_t>(hi)};
}

double ExactBound::approx() const {
  return (static_cast<double>(twice_rational_) + static_cast<double>(sqrt5_coeff_) * std::sqrt(5.0)) / 2.0;
}

std::string ExactBound::to_string() const {
  if (is_integer()) return std::to_string(twice_rational_ / 2);
  if (is_rational()) {
    const std::int64_t whole = floor_div(twice_rational_, 2);
    return std::to_string(whole) + ".5";
  }
  const auto [lo, hi] = enclosure_micro();
  return "[" + micro_to_string(lo) + ", " + micro_to_string(hi) + "]";
}

bool bound_le(const ExactBound& a, const ExactBound& b) {
  return sign_with_sqrt5(static_cast<i128>(b.twice_rational()) - a.twice_rational(),
                         static_cast<i128>(b.sqrt5_coeff()) - a.sqrt5_coeff()) >= 0;
}

int bound_thmA(int k) {
  if (k < 1) throw Error("bound needs k >= 1");
  return 2 * k - 1;
}

int bound_thmB(int k, int l) {
  check_kl(k, l);
  return l <= 2 * k - 3 ? l + k : 3 * k - 3;
}

int bound_freiman_lev(int k, int l) {
  check_kl(k, l);
  return l <= 2 * k - 5 ? l + k - 2 : 3 * k - 7;
}

ExactBound bound_thmE(int k, int l) {
  check_kl(k, l);
  // 0.5(l+k) + k - 3.5 = (l + 3k - 7)/2 ; 2.5k - 5 = (5k - 10)/2
  return l <= 2 * k - 3 ? ExactBound::halves(l + 3 * k - 7) : ExactBound::halves(5 * k - 10);
}

ExactBound bound_thmF(int k, int l) {
  check_kl(k, l);
  if (l <= 2 * k - 5) return ExactBound::integer(l + k - 2);
  return ExactBound::with_sqrt5(3 * k - 12, k);
}

ApResult is_arithmetic_progression(const IntegerSet& a) {
  if (a.empty()) throw Error("empty set");
  if (a.size() == 1) return {true, std::nullopt};
  const int d = a[1] - a[0];
  for (std::size_t i = 2; i < a.size(); ++i) {
    if (a[i] - a[i - 1] != d) return {false, std::nullopt};
  }
  return {true, d};
}

int ap_cover_length(const NormalizedSet& a) { return a.l() + 1; }

int ap_cover_length(const IntegerSet& a) {
  if (a.size() == 1) return 1;
  return ap_cover_length(normalize(a).set);
}

ApResult is_union_two_aps_same_diff(const IntegerSet& a) {
  if (a.size() < 2) throw Error("need at least two elements");
  const int span = a.max() - a.min();
  for (int d = 1; d <= span; ++d) {
    // A run starts at x whenever x - d is not in A.
    int runs = 0;
    for (int x : a) {
      if (!a.contains(x - d) && ++runs > 2) break;
    }
    if (runs <= 2) return {true, d};
  }
  return {false, std::nullopt};
}

const BoundEntry& BoundReport::entry(const std::string& name) const {
  auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.name == name; });
  if (it == entries.end()) throw Error("no bound entry named " + name);
  return *it;
}

BoundReport evaluate_bounds(const NormalizedSet& a) {
  const int k = a.k();
  const int l = a.l();
  if (k < 3) throw Error("bound report needs k >= 3");
  const auto doubled = static_cast<std::int64_t>(sumset(a.set(), a.set()).size());
  const auto restricted = static_cast<std::int64_t>(restricted_sumset_size(a.set()));

  BoundReport r;
  r.k = k;
  r.l = l;
  r.card_2A = doubled;
  r.card_2hatA = restricted;

  auto add = [&](std::string name, bool on_double, bool applicable, bool in_hypothesis, ExactBound bound) {
    BoundEntry e;
    e.name = std::move(name);
    e.target = on_double ? "2A" : "2^A";
    e.applicable = applicable;
    e.in_hypothesis = in_hypothesis;
    e.bound = bound;
    e.observed = on_double ? doubled : restricted;
    e.satisfied = bound.satisfied_by(e.observed);
    e.tight = bound.attained_by(e.observed);
    r.entries.push_back(std::move(e));
  };

  bool growth = true;
  for (int i = 1; i <= k - 2; ++i) growth = growth && a[i] < 2 * i;
  const bool last_large = l >= 2 * k - 2;

  add("thmA", true, true, true, ExactBound::integer(bound_thmA(k)));
  add("thmB", true, true, true, ExactBound::integer(bound_thmB(k, l)));
  add("thmE", false, true, true, bound_thmE(k, l));
  add("thmF", false, true, true, bound_thmF(k, l));
  add("thmG", false, k >= 5 && l >= 2 * k - 4 && l <= 2 * k - 3, true, ExactBound::integer(3 * k - 7));
  add("freiman_lev", false, true, k > 7, ExactBound::integer(bound_freiman_lev(k, l)));
  add("theorem1", false, a[k - 2] < 2 * k - 4 && last_large, true, ExactBound::integer(3 * k - 7));
  add("theorem2", false, growth && last_large, true, ExactBound::integer(3 * k - 7));

  const bool ap = is_arithmetic_progression(a.set()).is_ap;
  const int cover = ap_cover_length(a);
  r.structure.push_back({"thmA_equality", true, (doubled == 2 * k - 1) == ap,
                         ap ? "arithmetic progression" : "not an arithmetic progression"});
  {
    StructureCheck c{"thmC", doubled <= 3 * k - 4, true, ""};
    if (c.applicable) {
      const std::int64_t b = doubled - (2 * k - 1);
      c.holds = cover <= k + b;
      c.detail = "cover " + std::to_string(cover) + " <= k+b " + std::to_string(k + b);
    }
    r.structure.push_back(c);
  }
  {
    StructureCheck c{"thmD", k > 6 && doubled == 3 * k - 3, true, ""};
    if (c.applicable) {
      const auto two = is_union_two_aps_same_diff(a.set());
      c.holds = cover <= 2 * k - 1 || two.is_ap;
      c.detail = cover <= 2 * k - 1 ? "cover " + std::to_string(cover) + " <= 2k-1"
                                    : (two.is_ap ? "two APs with difference " + std::to_string(*two.difference)
                                                 : "no structure found");
    }
    r.structure.push_back(c);
  }
  return r;
}

std::string format_report(const BoundReport& r) {
  std::ostringstream os;
  os << "k = " << r.k << ", l = " << r.l << ", |2A| = " << r.card_2A.value_or(-1)
     << ", |2^A| = " << r.card_2hatA.value_or(-1) << '\n';
  os << std::left << std::setw(14) << "bound" << std::setw(6) << "on" << std::setw(26) << "value"
     << std::setw(10) << "observed" << std::setw(11) << "satisfied" << "tight" << '\n';
  for (const auto& e : r.entries) {
    std::string name = e.name;
    if (!e.applicable) name += "*";
    if (!e.in_hypothesis) name += "~";
    os << std::setw(14) << name << std::setw(6) << e.target << std::setw(26) << e.bound.to_string()
       << std::setw(10) << e.observed << std::setw(11) << (e.satisfied ? "yes" : "NO")
       << (e.tight ? "yes" : "no") << '\n';
  }
  for (const auto& c : r.structure) {
    os << std::setw(14) << c.name << (c.applicable ? (c.holds ? "holds" : "FAILS") : "n/a");
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << '\n';
  }
  os << "(* hypotheses of the bound not met by this set; ~ below the conjecture's k > 7 range)\n";
  return os.str();
}

std::string report_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["k"] = r.k;
  j["l"] = r.l;
  j["card_2A"] = r.card_2A ? nlohmann::ordered_json(*r.card_2A) : nlohmann::ordered_json(nullptr);
  j["card_2hatA"] = r.card_2hatA ? nlohmann::ordered_json(*r.card_2hatA) : nlohmann::ordered_json(nullptr);
  for (const auto& e : r.entries) {
    nlohmann::ordered_json o;
    o["target"] = e.target;
    o["applicable"] = e.applicable;
    o["in_hypothesis"] = e.in_hypothesis;
    if (e.bound.is_integer()) {
      o["bound"] = e.bound.twice_rational() / 2;
    } else {
      o["bound"] = e.bound.approx();
    }
    if (e.bound.is_rational()) {
      o["bound_times_2"] = e.bound.twice_rational();
    } else {
      const auto [lo, hi] = e.bound.enclosure_micro();
      o["bound_enclosure_micro"] = {lo, hi};
    }
    o["observed"] = e.observed;
    o["satisfied"] = e.satisfied;
    o["tight"] = e.tight;
    j[e.name] = o;
  }
  nlohmann::ordered_json s;
  for (const auto& c : r.structure) {
    s[c.name] = {{"applicable", c.applicable}, {"holds", c.holds}, {"detail", c.detail}};
  }
  j["structure"] = s;
  return j.dump();
}

}  // namespace sumset
