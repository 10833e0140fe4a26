#include <doctest.h>

#include "klr/bruhat.hpp"
#include "klr/omega.hpp"
#include "oracles.hpp"

using klr::Permutation;
using klr::Word;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }

// Position sets of Omega_n whose induced word is reduced, by subset enumeration.
std::map<oracle::Perm, std::set<std::vector<int>>> brute_subwords(int n) {
  const auto om = klr::omega_word(n);
  const oracle::Letters letters(om.letters().begin(), om.letters().end());
  const std::size_t k = letters.size();
  std::map<oracle::Perm, std::set<std::vector<int>>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    oracle::Letters sub;
    std::vector<int> pos;
    for (std::size_t b = 0; b < k; ++b)
      if (mask >> b & 1) {
        sub.push_back(letters[b]);
        pos.push_back(static_cast<int>(b) + 1);
      }
    const auto p = oracle::apply_word(n, sub);
    if (oracle::inversions(p) == static_cast<int>(sub.size())) out[p].insert(pos);
  }
  return out;
}
}  // namespace

TEST_CASE("omega_word and v_perm") {
  CHECK(klr::omega_word(3) == Word(3, {2, 1}));
  CHECK(klr::omega_word(4) == Word(4, {2, 1, 3, 2}));
  CHECK(klr::evaluate(klr::omega_word(5)) == P("34512"));
  CHECK(klr::v_perm(4) == P("3412"));
  CHECK(klr::v_perm(2) == P("12"));
  CHECK_THROWS_AS(klr::omega_word(2), std::invalid_argument);
  for (int n = 3; n <= 9; ++n) {
    const Word w = klr::omega_word(n);
    CHECK(w.size() == static_cast<std::size_t>(2 * (n - 2)));
    CHECK(klr::is_reduced(w));
    CHECK(klr::evaluate(w) == klr::v_perm(n));
  }
}

TEST_CASE("statistics") {
  const Word w(8, {2, 3, 4, 3, 6, 5, 7});
  CHECK(klr::d_stat(w) == 2);
  CHECK(klr::h_stat(9, w) == 4);
  CHECK(klr::g_stat(w) == 3);
  CHECK(klr::d_stat(Word(4)) == 0);
  CHECK(klr::h_stat(4, Word(4)) == 4);
  for (int n = 3; n <= 9; ++n) {
    const Word om = klr::omega_word(n);
    CHECK(klr::d_stat(om) == n - 2);
    CHECK(klr::h_stat(n, om) == 2);
    CHECK(klr::g_stat(om) == 0);
  }
}

TEST_CASE("reduced_subwords_for examples") {
  const auto subs = klr::reduced_subwords_for(4, P("1324"));
  REQUIRE(subs.size() == 2);
  CHECK(subs[0].positions == std::vector<int>{1});
  CHECK(subs[1].positions == std::vector<int>{4});
  for (const auto& s : subs) {
    CHECK(s.value() == P("1324"));
    CHECK(klr::d_stat(s.word) == 0);
    CHECK(klr::h_stat(4, s.word) == 3);
    CHECK(klr::g_stat(s.word) == 1);
  }
  const auto empty = klr::reduced_subwords_for(4, Permutation::identity(4));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].positions.empty());
  CHECK(klr::reduced_subwords_for(4, P("4312")).empty());
  CHECK_THROWS_AS(klr::reduced_subwords_for(4, P("123")), klr::RankMismatch);
}

TEST_CASE("reduced subwords agree with subset enumeration (n <= 7)") {
  for (int n = 3; n <= 7; ++n) {
    const auto brute = brute_subwords(n);
    const auto got = klr::all_reduced_subwords(n);
    REQUIRE(got.size() == brute.size());
    CHECK(got.size() == klr::interval_below(klr::v_perm(n)).size());
    for (const auto& [sigma, list] : got) {
      const auto entries = sigma.entries();
      const auto it = brute.find(oracle::Perm(entries.begin(), entries.end()));
      REQUIRE(it != brute.end());
      std::set<std::vector<int>> positions;
      for (const auto& s : list) {
        REQUIRE(s.value() == sigma);
        positions.insert(s.positions);
      }
      CHECK(positions == it->second);
      CHECK(std::is_sorted(list.begin(), list.end(),
                           [](const auto& a, const auto& b) { return a.positions < b.positions; }));
    }
  }
}

TEST_CASE("d is an invariant of sigma (n <= 8)") {
  for (int n = 3; n <= 8; ++n) {
    for (const auto& [sigma, list] : klr::all_reduced_subwords(n)) {
      const int d = klr::d_stat(list.front().word);
      for (const auto& s : list) REQUIRE(klr::d_stat(s.word) == d);
    }
  }
}

TEST_CASE("2 <= h <= n (n <= 7)") {
  for (int n = 3; n <= 7; ++n) {
    for (const auto& [sigma, list] : klr::all_reduced_subwords(n)) {
      for (const auto& s : list) {
        const int h = klr::h_stat(n, s.word);
        REQUIRE(h >= 2);
        REQUIRE(h <= n);
      }
    }
  }
}

TEST_CASE("lemma checkers") {
  const auto empty = klr::reduced_subwords_for(4, Permutation::identity(4)).front();
  CHECK(klr::lemma_descent_applies(4, empty));
  CHECK(klr::check_lemma_descent(4, empty));
  CHECK_THROWS_AS(klr::check_lemma_h2(4, empty), std::invalid_argument);

  const auto full = klr::reduced_subwords_for(4, klr::v_perm(4)).front();
  CHECK_FALSE(klr::lemma_descent_applies(4, full));
  CHECK(klr::check_lemma_h2(4, full));
  CHECK_THROWS_AS(klr::check_lemma_descent(4, full), std::invalid_argument);

  for (int n = 4; n <= 6; ++n) {
    std::size_t descent = 0, h2 = 0;
    for (const auto& [sigma, list] : klr::all_reduced_subwords(n)) {
      for (const auto& s : list) {
        if (klr::lemma_descent_applies(n, s)) {
          CHECK(klr::check_lemma_descent(n, s));
          ++descent;
        } else {
          CHECK(klr::check_lemma_h2(n, s));
          ++h2;
        }
      }
    }
    CHECK(descent > 0);
    CHECK(h2 > 0);
  }
}
