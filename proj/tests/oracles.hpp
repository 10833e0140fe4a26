#pragma once

// Brute-force reference computations used only by the tests. They work on
// plain vectors and never call into the library's algorithms.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;
using Letters = std::vector<int>;

inline int inversions(const Perm& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv;
}

inline Perm apply_word(int n, const Letters& w) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  for (int i : w) std::swap(p[i - 1], p[i]);
  return p;
}

// Descents by the length-drop definition.
inline std::vector<int> descents_by_length(const Perm& p) {
  std::vector<int> out;
  for (std::size_t i = 1; i < p.size(); ++i) {
    Perm q = p;
    std::swap(q[i - 1], q[i]);
    if (inversions(q) < inversions(p)) out.push_back(static_cast<int>(i));
  }
  return out;
}

// Every word of length l(p) over 1..n-1 that evaluates to p.
inline std::set<Letters> reduced_words(const Perm& p) {
  const int n = static_cast<int>(p.size());
  const int len = inversions(p);
  std::set<Letters> out;
  Letters w(len, 1);
  if (len == 0) return {Letters{}};
  while (true) {
    if (apply_word(n, w) == p) out.insert(w);
    int k = len - 1;
    while (k >= 0 && w[k] == n - 1) w[k--] = 1;
    if (k < 0) break;
    ++w[k];
  }
  return out;
}

// u <= v: some subword of the given reduced word of v evaluates to u with
// length l(u). Enumerates all 2^l subsets.
inline bool bruhat_by_subsets(const Perm& u, const Letters& reduced_v) {
  const int n = static_cast<int>(u.size());
  const int lu = inversions(u);
  const std::size_t k = reduced_v.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    if (std::popcount(mask) != lu) continue;
    Letters sub;
    for (std::size_t b = 0; b < k; ++b)
      if (mask >> b & 1) sub.push_back(reduced_v[b]);
    if (apply_word(n, sub) == u) return true;
  }
  return false;
}

inline std::vector<Perm> all_perms(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Integer polynomial as a coefficient vector, lowest degree first.
using Coeffs = std::vector<long long>;

inline Coeffs trim(Coeffs c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

inline Coeffs q_fib(int m) {
  std::vector<Coeffs> f{{1}, {1}};
  for (int k = 2; k <= m; ++k) {
    Coeffs next = f[k - 1];
    next.resize(std::max(next.size(), f[k - 2].size() + 1));
    for (std::size_t j = 0; j < f[k - 2].size(); ++j) next[j + 1] += f[k - 2][j];
    f.push_back(next);
  }
  return f[m];
}

// q^lead * F_m(q^{-2})
inline Coeffs fib_qinv2(int m, int lead) {
  const Coeffs f = q_fib(m);
  Coeffs out(lead + 1);
  for (std::size_t k = 0; k < f.size(); ++k) out[lead - 2 * k] += f[k];
  return trim(out);
}

}  // namespace oracle
