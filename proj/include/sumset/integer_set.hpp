// integer_set.hpp
//
// Finite sets of nonnegative integers, stored twice: as a sorted element list
// (for indexed access a_0 < a_1 < ... < a_{k-1}) and as a bit vector indexed
// by value (for shift-OR sumset kernels).
#ifndef SUMSET_INTEGER_SET_HPP
#define SUMSET_INTEGER_SET_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sumset {

/// Largest element accepted from user input unless a caller passes its own limit.
inline constexpr int kDefaultMaxElement = 4096;

/// Every precondition failure in the library is reported with this type.
class Error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Fixed-capacity bit vector. Bit i set means value i is present.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t nbits);

  std::size_t capacity() const { return words_.size() * 64; }
  bool test(std::size_t i) const {
    return i < capacity() && ((words_[i >> 6] >> (i & 63)) & 1U) != 0;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  std::size_t count() const;

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  /// Ascending list of set bits.
  std::vector<int> to_values() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

class IntegerSet {
 public:
  using value_type = int;
  using const_iterator = std::vector<int>::const_iterator;

  IntegerSet() = default;

  /// `ascending` must be strictly increasing, nonnegative, and at most `max_element`.
  explicit IntegerSet(std::vector<int> ascending, int max_element = kDefaultMaxElement);

  /// Sorts and deduplicates first; same range checks as the main constructor.
  static IntegerSet from_unsorted(std::vector<int> values, int max_element = kDefaultMaxElement);
  /// Builds from kernel output. No max_element check: sumsets reach twice the input bound.
  static IntegerSet from_bits(const BitVector& bits);
  /// [lo, hi]; empty when hi < lo.
  static IntegerSet interval(int lo, int hi);

  std::span<const int> elements() const { return elements_; }
  const BitVector& bits() const { return bits_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  int min() const;
  int max() const;
  int operator[](std::size_t i) const { return elements_[i]; }
  bool contains(int v) const { return v >= 0 && bits_.test(static_cast<std::size_t>(v)); }

  const_iterator begin() const { return elements_.begin(); }
  const_iterator end() const { return elements_.end(); }

  friend bool operator==(const IntegerSet& a, const IntegerSet& b) {
    return a.elements_ == b.elements_;
  }
  friend std::strong_ordering operator<=>(const IntegerSet& a, const IntegerSet& b) {
    return a.elements_ <=> b.elements_;
  }

 private:
  struct Unchecked {};
  IntegerSet(Unchecked, std::vector<int> ascending);

  std::vector<int> elements_;
  BitVector bits_;
};

/// A set in the standing form of the bounds: min 0, gcd 1, k >= 2.
class NormalizedSet {
 public:
  explicit NormalizedSet(IntegerSet s);
  static NormalizedSet of(std::vector<int> ascending) {
    return NormalizedSet(IntegerSet(std::move(ascending)));
  }

  const IntegerSet& set() const { return set_; }
  std::span<const int> elements() const { return set_.elements(); }
  int k() const { return static_cast<int>(set_.size()); }
  int l() const { return set_.max(); }
  /// a_i
  int operator[](std::size_t i) const { return set_[i]; }

  /// A' = A without its maximum.
  IntegerSet without_last() const;

  friend bool operator==(const NormalizedSet&, const NormalizedSet&) = default;
  friend std::strong_ordering operator<=>(const NormalizedSet& a, const NormalizedSet& b) {
    return a.set_ <=> b.set_;
  }

 private:
  IntegerSet set_;
};

/// gcd of the nonzero elements; 0 when there are none.
int gcd_of(std::span<const int> values);

// Set literal text format: "{0,1,4,5,6,9}". Whitespace around tokens is accepted
// on input; output never contains spaces.
IntegerSet parse_set_literal(std::string_view text, int max_element = kDefaultMaxElement);
std::string to_literal(const IntegerSet& s);
std::string to_literal(const NormalizedSet& s);
std::string to_literal(std::span<const int> ascending);

// Elementwise set algebra on ascending lists.
IntegerSet set_union(const IntegerSet& a, const IntegerSet& b);
IntegerSet set_intersection(const IntegerSet& a, const IntegerSet& b);
IntegerSet set_difference(const IntegerSet& a, const IntegerSet& b);
bool is_subset(const IntegerSet& a, const IntegerSet& b);
/// {a + t : a in A}; the result must stay nonnegative.
IntegerSet translate(const IntegerSet& a, int t);

}  // namespace sumset

#endif  // SUMSET_INTEGER_SET_HPP
