#include "sumset/sumset.hpp"

#include <algorithm>

namespace sumset {
namespace {

// Word i of (src << shift), reading zeros outside src.
inline std::uint64_t shifted_word(std::span<const std::uint64_t> src, std::size_t i,
                                  std::size_t word_shift, unsigned bit_shift) {
  if (i < word_shift) return 0;
  const std::size_t j = i - word_shift;
  std::uint64_t w = j < src.size() ? src[j] << bit_shift : 0;
  if (bit_shift != 0 && j >= 1 && j - 1 < src.size()) w |= src[j - 1] >> (64 - bit_shift);
  return w;
}

std::size_t sum_capacity(const IntegerSet& a, const IntegerSet& b) {
  return static_cast<std::size_t>(a.max()) + static_cast<std::size_t>(b.max()) + 1;
}

// Fills `once` with A + A and `twice` with the sums hit by at least two ordered pairs.
void two_plane_kernel(const IntegerSet& a, BitVector& once, BitVector& twice) {
  const auto src = a.bits().words();
  auto o = once.words();
  auto t = twice.words();
  for (int shift : a) {
    const auto ws = static_cast<std::size_t>(shift) / 64;
    const auto bs = static_cast<unsigned>(shift % 64);
    const std::size_t last = std::min(o.size(), src.size() + ws + 1);
    for (std::size_t i = ws; i < last; ++i) {
      const std::uint64_t s = shifted_word(src, i, ws, bs);
      t[i] |= o[i] & s;
      o[i] |= s;
    }
  }
}

}  // namespace

IntegerSet sumset(const IntegerSet& a, const IntegerSet& b) {
  if (a.empty() || b.empty()) throw Error("empty set");
  BitVector out(sum_capacity(a, b));
  const auto src = b.bits().words();
  auto o = out.words();
  for (int shift : a) {
    const auto ws = static_cast<std::size_t>(shift) / 64;
    const auto bs = static_cast<unsigned>(shift % 64);
    const std::size_t last = std::min(o.size(), src.size() + ws + 1);
    for (std::size_t i = ws; i < last; ++i) o[i] |= shifted_word(src, i, ws, bs);
  }
  return IntegerSet::from_bits(out);
}

IntegerSet restricted_sumset(const IntegerSet& a) {
  if (a.size() < 2) throw Error("need at least two elements");
  BitVector once(sum_capacity(a, a));
  BitVector twice(sum_capacity(a, a));
  two_plane_kernel(a, once, twice);
  return IntegerSet::from_bits(twice);
}

std::size_t restricted_sumset_size(const IntegerSet& a) {
  if (a.size() < 2) throw Error("need at least two elements");
  BitVector once(sum_capacity(a, a));
  BitVector twice(sum_capacity(a, a));
  two_plane_kernel(a, once, twice);
  return twice.count();
}

Normalization normalize(const IntegerSet& a) {
  if (a.size() < 2) throw Error("need at least two elements");
  const int offset = a.min();
  std::vector<int> shifted(a.begin(), a.end());
  for (int& v : shifted) v -= offset;
  const int scale = gcd_of(shifted);
  for (int& v : shifted) v /= scale;
  return {NormalizedSet(IntegerSet(std::move(shifted), a.max())), offset, scale};
}

NormalizedSet reflect(const NormalizedSet& a) {
  const int l = a.l();
  std::vector<int> mirrored;
  mirrored.reserve(a.elements().size());
  for (auto it = a.elements().rbegin(); it != a.elements().rend(); ++it) mirrored.push_back(l - *it);
  return normalize(IntegerSet(std::move(mirrored), l)).set;
}

IntegerSet exceptional_set(const NormalizedSet& a) {
  if (a.k() < 3) throw Error("exceptional set needs k >= 3");
  const auto restricted_prime = restricted_sumset(a.without_last());
  std::vector<int> missing;
  for (int x = 1; x <= 2 * a.k() - 4; ++x) {
    if (!restricted_prime.contains(x)) missing.push_back(x);
  }
  return IntegerSet(std::move(missing), 2 * a.k());
}

SumsetProfile profile(const NormalizedSet& a) {
  SumsetProfile p{a, sumset(a.set(), a.set()), restricted_sumset(a.set()), std::nullopt};
  if (a.k() >= 3) p.exceptional = exceptional_set(a);
  return p;
}

}  // namespace sumset
