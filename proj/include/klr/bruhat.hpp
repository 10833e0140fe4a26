#pragma once

#include <vector>

#include "klr/permutation.hpp"

namespace klr {

// Largest rank for which interval_below enumerates by default.
inline constexpr int kIntervalCapacity = 8;

struct BruhatInterval {
  Permutation top;
  std::vector<Permutation> elements;  // sorted lexicographically

  bool contains(const Permutation& p) const;
  std::size_t size() const { return elements.size(); }
};

// u <= v by the sorted-prefix (tableau) criterion. O(n^2).
bool bruhat_leq(const Permutation& u, const Permutation& v);

// u <= v by the subword property: some subword of a fixed reduced word of v
// is a reduced expression of u. Exponential in length(v).
bool bruhat_leq_subword(const Permutation& u, const Permutation& v);

// All sigma <= v. Ranks up to max_rank are enumerated by filtering S_n;
// above that a CapacityError is thrown. Passing a larger max_rank (the CLI's
// --force) switches to closing the subword evaluations of one reduced word.
BruhatInterval interval_below(const Permutation& v, int max_rank = kIntervalCapacity);

// The same set built from subword products of a reduced word of v.
BruhatInterval interval_below_by_subwords(const Permutation& v);

// For u < v, checks u <= v s_i and u s_i <= v for every i in D_R(v) \ D_R(u).
// Throws std::invalid_argument unless u < v.
bool check_lifting(const Permutation& u, const Permutation& v);

}  // namespace klr
