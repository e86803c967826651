#include "sumset/integer_set.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>

namespace sumset {

BitVector::BitVector(std::size_t nbits) : words_((nbits + 63) / 64, 0) {}

std::size_t BitVector::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<int> BitVector::to_values() const {
  std::vector<int> out;
  out.reserve(count());
  for (std::size_t j = 0; j < words_.size(); ++j) {
    auto w = words_[j];
    while (w != 0) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<int>(j * 64) + bit);
      w &= w - 1;
    }
  }
  return out;
}

IntegerSet::IntegerSet(std::vector<int> ascending, int max_element) {
  for (std::size_t i = 0; i < ascending.size(); ++i) {
    if (ascending[i] < 0) throw Error("set elements must be nonnegative");
    if (ascending[i] > max_element) {
      throw Error("element " + std::to_string(ascending[i]) + " exceeds the supported maximum " +
                  std::to_string(max_element));
    }
    if (i > 0 && ascending[i] <= ascending[i - 1]) {
      throw Error("set elements must be strictly ascending");
    }
  }
  *this = IntegerSet(Unchecked{}, std::move(ascending));
}

IntegerSet::IntegerSet(Unchecked, std::vector<int> ascending)
    : elements_(std::move(ascending)),
      bits_(elements_.empty() ? 0 : static_cast<std::size_t>(elements_.back()) + 1) {
  for (int v : elements_) bits_.set(static_cast<std::size_t>(v));
}

IntegerSet IntegerSet::from_unsorted(std::vector<int> values, int max_element) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return IntegerSet(std::move(values), max_element);
}

IntegerSet IntegerSet::from_bits(const BitVector& bits) {
  return IntegerSet(Unchecked{}, bits.to_values());
}

IntegerSet IntegerSet::interval(int lo, int hi) {
  if (lo < 0 && hi >= 0) throw Error("set elements must be nonnegative");
  std::vector<int> v;
  for (int x = lo; x <= hi; ++x) v.push_back(x);
  return IntegerSet(Unchecked{}, std::move(v));
}

int IntegerSet::min() const {
  if (elements_.empty()) throw Error("empty set");
  return elements_.front();
}

int IntegerSet::max() const {
  if (elements_.empty()) throw Error("empty set");
  return elements_.back();
}

NormalizedSet::NormalizedSet(IntegerSet s) : set_(std::move(s)) {
  if (set_.size() < 2) throw Error("need at least two elements");
  if (set_.min() != 0) throw Error("normalized set must contain 0 as its minimum");
  if (gcd_of(set_.elements()) != 1) throw Error("normalized set must have gcd 1");
}

IntegerSet NormalizedSet::without_last() const {
  auto e = set_.elements();
  return IntegerSet(std::vector<int>(e.begin(), e.end() - 1));
}

int gcd_of(std::span<const int> values) {
  int g = 0;
  for (int v : values) g = std::gcd(g, v);
  return g;
}

IntegerSet parse_set_literal(std::string_view text, int max_element) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw Error("set literal must look like {0,1,4}");
  }
  text = trim(text.substr(1, text.size() - 2));
  std::vector<int> values;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = trim(text.substr(0, comma));
    int v = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (token.empty() || ec != std::errc{} || ptr != end) {
      throw Error("bad integer '" + std::string(token) + "' in set literal");
    }
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
    if (trim(text).empty()) throw Error("trailing comma in set literal");
  }
  return IntegerSet(std::move(values), max_element);
}

std::string to_literal(std::span<const int> ascending) {
  std::string out = "{";
  for (std::size_t i = 0; i < ascending.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(ascending[i]);
  }
  out += '}';
  return out;
}

std::string to_literal(const IntegerSet& s) { return to_literal(s.elements()); }
std::string to_literal(const NormalizedSet& s) { return to_literal(s.elements()); }

IntegerSet set_union(const IntegerSet& a, const IntegerSet& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return IntegerSet(std::move(out), std::max(a.empty() ? 0 : a.max(), b.empty() ? 0 : b.max()));
}

IntegerSet set_intersection(const IntegerSet& a, const IntegerSet& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return IntegerSet(std::move(out), a.empty() ? 0 : a.max());
}

IntegerSet set_difference(const IntegerSet& a, const IntegerSet& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return IntegerSet(std::move(out), a.empty() ? 0 : a.max());
}

bool is_subset(const IntegerSet& a, const IntegerSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

IntegerSet translate(const IntegerSet& a, int t) {
  std::vector<int> out(a.begin(), a.end());
  for (int& v : out) v += t;
  if (!out.empty() && out.front() < 0) throw Error("translation leaves the nonnegative integers");
  const int top = out.empty() ? 0 : out.back();
  return IntegerSet(std::move(out), top);
}

}  // namespace sumset
