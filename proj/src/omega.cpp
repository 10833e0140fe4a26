#include "klr/omega.hpp"

#include <algorithm>
#include <stdexcept>

#include "klr/bruhat.hpp"

namespace klr {

Permutation v_perm(int n) {
  if (n < 2) throw std::invalid_argument("v_n needs n >= 2");
  std::vector<int> e;
  for (int k = 3; k <= n; ++k) e.push_back(k);
  e.push_back(1);
  e.push_back(2);
  if (n == 2) e = {1, 2};
  return Permutation(e);
}

Word omega_word(int n) {
  if (n < 3) throw std::invalid_argument("omega_word needs n >= 3, got " + std::to_string(n));
  std::vector<int> letters;
  for (int k = 2; k <= n - 1; ++k) {
    letters.push_back(k);
    letters.push_back(k - 1);
  }
  return Word(n, std::move(letters));
}

namespace {

using Partial = std::map<Permutation, std::vector<std::vector<int>>>;

// Dynamic programme over prefixes of Omega_n keyed by partial product. Only
// letters that lengthen the product are taken, so every surviving position
// set induces a reduced word. `keep` prunes partial products.
template <typename Keep>
Partial sweep_omega(int n, Keep keep) {
  const Word omega = omega_word(n);
  Partial states;
  states[Permutation::identity(n)].emplace_back();
  for (std::size_t k = 0; k < omega.size(); ++k) {
    const int a = omega[k];
    const int remaining = static_cast<int>(omega.size() - k - 1);
    Partial next;
    for (auto& [p, sets] : states) {
      if (keep(p, remaining)) {
        auto& dst = next[p];
        dst.insert(dst.end(), sets.begin(), sets.end());
      }
      if (p.has_right_descent(a)) continue;
      const Permutation q = p.times_s(a);
      if (!keep(q, remaining)) continue;
      auto& dst = next[q];
      for (const auto& s : sets) {
        auto ext = s;
        ext.push_back(static_cast<int>(k) + 1);
        dst.push_back(std::move(ext));
      }
    }
    states = std::move(next);
  }
  return states;
}

OmegaSubword make_subword(int n, const Word& omega, std::vector<int> positions) {
  std::vector<int> letters;
  letters.reserve(positions.size());
  for (int pos : positions) letters.push_back(omega[pos - 1]);
  return {n, std::move(positions), Word(n, std::move(letters))};
}

}  // namespace

std::vector<OmegaSubword> reduced_subwords_for(int n, const Permutation& sigma) {
  if (sigma.rank() != n) throw RankMismatch(n, sigma.rank());
  const int target = sigma.length();
  const auto states = sweep_omega(n, [&](const Permutation& p, int remaining) {
    return p.length() + remaining >= target && bruhat_leq(p, sigma);
  });
  std::vector<OmegaSubword> out;
  auto it = states.find(sigma);
  if (it == states.end()) return out;
  const Word omega = omega_word(n);
  for (const auto& positions : it->second) out.push_back(make_subword(n, omega, positions));
  std::sort(out.begin(), out.end(),
            [](const OmegaSubword& a, const OmegaSubword& b) { return a.positions < b.positions; });
  return out;
}

std::map<Permutation, std::vector<OmegaSubword>> all_reduced_subwords(int n) {
  const auto states = sweep_omega(n, [](const Permutation&, int) { return true; });
  const Word omega = omega_word(n);
  std::map<Permutation, std::vector<OmegaSubword>> out;
  for (const auto& [p, sets] : states) {
    auto& dst = out[p];
    for (const auto& positions : sets) dst.push_back(make_subword(n, omega, positions));
    std::sort(dst.begin(), dst.end(), [](const OmegaSubword& a, const OmegaSubword& b) {
      return a.positions < b.positions;
    });
  }
  return out;
}

int d_stat(const Word& w) {
  int d = 0;
  for (std::size_t t = 0; t + 1 < w.size(); ++t)
    if (w[t] - w[t + 1] == 1) ++d;
  return d;
}

int h_stat(int n, const Word& w) { return n - static_cast<int>(w.size()) + d_stat(w); }

int g_stat(const Word& w) { return static_cast<int>(w.size()) - 2 * d_stat(w); }

bool lemma_descent_applies(int n, const OmegaSubword& w) {
  return bruhat_leq(w.value().times_s(n - 1), v_perm(n));
}

bool check_lemma_descent(int n, const OmegaSubword& w) {
  if (!lemma_descent_applies(n, w)) {
    throw std::invalid_argument("check_lemma_descent: w s_{n-1} is not below v_n for w = [" +
                                w.word.to_string() + "]");
  }
  const int d = d_stat(w.word);
  const auto candidates = reduced_subwords_for(n, w.value().times_s(n - 1));
  return std::any_of(candidates.begin(), candidates.end(),
                     [&](const OmegaSubword& c) { return d_stat(c.word) == d; });
}

bool check_lemma_h2(int n, const OmegaSubword& w) {
  if (lemma_descent_applies(n, w)) {
    throw std::invalid_argument("check_lemma_h2: w s_{n-1} is below v_n for w = [" +
                                w.word.to_string() + "]");
  }
  return h_stat(n, w.word) == 2;
}

}  // namespace klr
