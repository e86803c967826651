// sumset.hpp
//
// Sumset kernels. Both kernels work on the value-indexed bit vectors: for each
// a in A the set B is shifted by a and OR-ed into the result, so the cost is
// O(|A| * max(B) / 64) word operations.
#ifndef SUMSET_SUMSET_HPP
#define SUMSET_SUMSET_HPP

#include <optional>

#include "sumset/integer_set.hpp"

namespace sumset {

/// A + B = {a + b}. Throws on empty input.
IntegerSet sumset(const IntegerSet& a, const IntegerSet& b);

/// 2^A = {a_i + a_j : i < j}. Throws when |A| < 2.
///
/// Computed with two bit planes over the ordered pairs (a, b): `once` collects
/// every sum, `twice` every sum hit at least twice. A sum a + b with a != b is
/// always hit twice (by (a, b) and (b, a)); a doubled point 2a with no other
/// representation is hit once. Hence 2^A is exactly the `twice` plane.
IntegerSet restricted_sumset(const IntegerSet& a);

/// |2^A| without materializing the element list.
std::size_t restricted_sumset_size(const IntegerSet& a);

struct Normalization {
  NormalizedSet set;
  int offset = 0;
  int scale = 1;
};

/// (A - min A) / gcd. Throws when |A| < 2.
Normalization normalize(const IntegerSet& a);

/// normalize({l - a : a in A}); an involution on normalized sets.
NormalizedSet reflect(const NormalizedSet& a);

struct SumsetProfile {
  NormalizedSet source;
  IntegerSet doubled;     // 2A
  IntegerSet restricted;  // 2^A
  /// B = [1, 2k-4] \ 2^(A \ {a_{k-1}}); present only when k >= 3.
  std::optional<IntegerSet> exceptional;
};

SumsetProfile profile(const NormalizedSet& a);

/// B = [1, 2k-4] \ 2^A' with A' = A \ {a_{k-1}}. Throws when k < 3.
IntegerSet exceptional_set(const NormalizedSet& a);

}  // namespace sumset

#endif  // SUMSET_SUMSET_HPP
