#include "klr/bruhat.hpp"

#include <algorithm>
#include <set>

namespace klr {

bool BruhatInterval::contains(const Permutation& p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
  if (u.rank() != v.rank()) throw RankMismatch(u.rank(), v.rank());
  const int n = u.rank();
  // Incrementally sorted prefixes u(1..i), v(1..i).
  std::array<int, kMaxRank> su{}, sv{};
  for (int i = 0; i < n; ++i) {
    int a = u(i + 1), b = v(i + 1);
    int k = i;
    while (k > 0 && su[k - 1] > a) {
      su[k] = su[k - 1];
      --k;
    }
    su[k] = a;
    k = i;
    while (k > 0 && sv[k - 1] > b) {
      sv[k] = sv[k - 1];
      --k;
    }
    sv[k] = b;
    for (int j = 0; j <= i; ++j)
      if (su[j] > sv[j]) return false;
  }
  return true;
}

namespace {

// Depth-first search over subwords of `word` whose partial products stay
// reduced; succeeds when the full product equals target.
bool subword_search(const Word& word, std::size_t pos, const Permutation& cur, int cur_len,
                    const Permutation& target, int target_len) {
  if (cur_len == target_len) return cur == target;
  const int remaining = static_cast<int>(word.size() - pos);
  if (cur_len + remaining < target_len) return false;
  const int a = word[pos];
  if (!cur.has_right_descent(a) &&
      subword_search(word, pos + 1, cur.times_s(a), cur_len + 1, target, target_len))
    return true;
  return subword_search(word, pos + 1, cur, cur_len, target, target_len);
}

}  // namespace

bool bruhat_leq_subword(const Permutation& u, const Permutation& v) {
  if (u.rank() != v.rank()) throw RankMismatch(u.rank(), v.rank());
  const Word w = some_reduced_word(v);
  return subword_search(w, 0, Permutation::identity(u.rank()), 0, u, u.length());
}

BruhatInterval interval_below_by_subwords(const Permutation& v) {
  const Word w = some_reduced_word(v);
  std::set<Permutation> reached{Permutation::identity(v.rank())};
  for (int a : w.letters()) {
    std::vector<Permutation> next;
    for (const auto& p : reached) next.push_back(p.times_s(a));
    reached.insert(next.begin(), next.end());
  }
  return {v, {reached.begin(), reached.end()}};
}

BruhatInterval interval_below(const Permutation& v, int max_rank) {
  const int n = v.rank();
  if (n > max_rank) {
    throw CapacityError("interval enumeration limited to n <= " + std::to_string(max_rank) +
                        ", got n = " + std::to_string(n));
  }
  if (n > kIntervalCapacity) return interval_below_by_subwords(v);
  const int top_len = v.length();
  BruhatInterval out{v, {}};
  for (const auto& p : all_permutations(n)) {
    if (p.length() <= top_len && bruhat_leq(p, v)) out.elements.push_back(p);
  }
  return out;
}

bool check_lifting(const Permutation& u, const Permutation& v) {
  if (u.rank() != v.rank()) throw RankMismatch(u.rank(), v.rank());
  if (u == v || !bruhat_leq(u, v)) {
    throw std::invalid_argument("check_lifting requires u < v, got " + u.to_string() + ", " +
                                v.to_string());
  }
  for (int i : v.right_descents()) {
    if (u.has_right_descent(i)) continue;
    if (!bruhat_leq(u, v.times_s(i)) || !bruhat_leq(u.times_s(i), v)) return false;
  }
  return true;
}

}  // namespace klr
