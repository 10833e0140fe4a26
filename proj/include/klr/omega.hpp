#pragma once

// The reduced word Omega_n = s_2 s_1 s_3 s_2 ... s_{n-1} s_{n-2} of
// v_n = 3 4 ... n 1 2, its reduced subwords, and the subword statistics
//   d(w) = #{t : w_t - w_{t+1} = 1},
//   h(w) = n - |w| + d(w),
//   g(w) = |w| - 2 d(w).

#include <map>
#include <vector>

#include "klr/permutation.hpp"

namespace klr {

// 3 4 ... n 1 2 for n >= 3; the identity for n = 2 (empty Omega_2).
Permutation v_perm(int n);

// Throws std::invalid_argument for n < 3.
Word omega_word(int n);

struct OmegaSubword {
  int n;
  std::vector<int> positions;  // 1-based, strictly increasing, into omega_word(n)
  Word word;

  Permutation value() const { return evaluate(word); }
};

// Every position set of Omega_n whose induced word is a reduced expression of
// sigma, in lexicographic order of positions. Empty when sigma is not below
// v_n.
std::vector<OmegaSubword> reduced_subwords_for(int n, const Permutation& sigma);

// All reduced subwords of Omega_n grouped by the permutation they express.
std::map<Permutation, std::vector<OmegaSubword>> all_reduced_subwords(int n);

int d_stat(const Word& w);
int h_stat(int n, const Word& w);
int g_stat(const Word& w);

// Requires evaluate(w) s_{n-1} <= v_n. True iff some reduced Omega_n-subword
// of evaluate(w) s_{n-1} has the same d statistic as w.
bool check_lemma_descent(int n, const OmegaSubword& w);

// Requires evaluate(w) s_{n-1} not <= v_n. True iff h(w) = 2.
bool check_lemma_h2(int n, const OmegaSubword& w);

// Whether evaluate(w) s_{n-1} <= v_n, selecting which lemma applies.
bool lemma_descent_applies(int n, const OmegaSubword& w);

}  // namespace klr
