#include <doctest.h>

#include <random>

#include "klr/bruhat.hpp"
#include "klr/closed_forms.hpp"
#include "klr/fib_factor.hpp"
#include "oracles.hpp"

using klr::FibFactorization;
using klr::IntPoly;
using klr::RPolyEngine;

namespace {
IntPoly from(const oracle::Coeffs& c) { return IntPoly(std::vector<klr::BigInt>(c.begin(), c.end())); }

// q^g * prod F_h(q^{-2}) computed on plain coefficient vectors.
oracle::Coeffs oracle_product(int g, const std::vector<int>& hs) {
  int lead = g;
  oracle::Coeffs acc{1};
  for (int h : hs) {
    const oracle::Coeffs f = oracle::fib_qinv2(h, 2 * (h / 2));
    oracle::Coeffs next(acc.size() + f.size() - 1);
    for (std::size_t a = 0; a < acc.size(); ++a)
      for (std::size_t b = 0; b < f.size(); ++b) next[a + b] += acc[a] * f[b];
    acc = next;
    lead -= 2 * (h / 2);
  }
  oracle::Coeffs out(static_cast<std::size_t>(lead), 0);
  out.insert(out.end(), acc.begin(), acc.end());
  return oracle::trim(out);
}
}  // namespace

TEST_CASE("factor_fibonacci examples") {
  CHECK(klr::factor_fibonacci(IntPoly{1}) == FibFactorization{0, {}});
  CHECK(klr::factor_fibonacci(IntPoly{0, 1}) == FibFactorization{1, {}});
  CHECK(klr::factor_fibonacci(IntPoly{0, 0, 1, 0, 1}) == FibFactorization{4, {2}});
  CHECK(klr::factor_fibonacci(IntPoly{1, 0, 1}) == FibFactorization{2, {2}});
  const auto c = klr::factor_fibonacci(IntPoly{0, 0, 0, 0, 0, 2, 0, 1});
  REQUIRE(c.has_value());
  CHECK(*c == FibFactorization{7, {3}});
  CHECK(c->to_string() == "g=7 h=[3]");
  CHECK(c->reconstruct() == IntPoly{0, 0, 0, 0, 0, 2, 0, 1});
}

TEST_CASE("T_n factors as a single Fibonacci block") {
  for (int n = 3; n <= 10; ++n) {
    const auto c = klr::factor_fibonacci(klr::t_poly(n));
    REQUIRE(c.has_value());
    CHECK(c->g == 2 * n - 4);
    if (n >= 4) CHECK(c->hs == std::vector<int>{n - 2});
    CHECK(c->reconstruct() == klr::t_poly(n));
  }
}

TEST_CASE("negative controls") {
  CHECK_FALSE(klr::factor_fibonacci(IntPoly{1, 1}).has_value());        // parity
  CHECK_FALSE(klr::factor_fibonacci(IntPoly{0, 0, 2}).has_value());     // not monic
  CHECK_FALSE(klr::factor_fibonacci(IntPoly{5, 0, 1}).has_value());     // residue 1 + 5x
  CHECK_FALSE(klr::factor_fibonacci(IntPoly{1, 0, 0, 0, 1}).has_value());
  CHECK_THROWS_AS(klr::factor_fibonacci(IntPoly{}), std::invalid_argument);
  CHECK_THROWS_AS(klr::factor_fibonacci(IntPoly{-1, 0, 1}), std::invalid_argument);
}

TEST_CASE("random Fibonacci products are recovered") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<int> hs(rng() % 4);
    for (int& h : hs) h = 2 + static_cast<int>(rng() % 8);
    int min_g = 0;
    for (int h : hs) min_g += 2 * (h / 2);
    const int g = min_g + static_cast<int>(rng() % 4);
    const IntPoly p = from(oracle_product(g, hs));
    const auto c = klr::factor_fibonacci(p);
    REQUIRE(c.has_value());
    CHECK(c->g == g);
    CHECK(std::is_sorted(c->hs.rbegin(), c->hs.rend()));
    for (int h : c->hs) CHECK(h >= 2);
    CHECK(c->reconstruct() == p);
    CHECK(from(oracle_product(c->g, c->hs)) == p);
  }
}

TEST_CASE("verify_conjecture at n = 3 counts comparable pairs") {
  const auto top = klr::v_perm(3);
  const auto below = klr::interval_below(top);
  std::size_t pairs = 0;
  for (const auto& a : below.elements)
    for (const auto& b : below.elements) {
      const auto w = klr::some_reduced_word(b);
      pairs += oracle::bruhat_by_subsets(a.entries(), {w.letters().begin(), w.letters().end()});
    }
  CHECK(pairs == 9);

  RPolyEngine engine;
  const auto report = klr::verify_conjecture(engine, 3, {true, 1, 8});
  CHECK(report.pairs_tested == pairs);
  CHECK(report.successes == pairs);
  CHECK(report.passed());
  REQUIRE(report.certificates.has_value());
  CHECK(report.certificates->size() == pairs);
}

TEST_CASE("verify_conjecture certificates reconstruct R~") {
  RPolyEngine engine;
  for (int n = 4; n <= 5; ++n) {
    const auto report = klr::verify_conjecture(engine, n, {true, 1, 8});
    CHECK(report.passed());
    REQUIRE(report.certificates.has_value());
    for (const auto& c : *report.certificates)
      CHECK(c.factorization.reconstruct() == engine.rtilde(c.lower, c.upper));
  }
}

TEST_CASE("verify_conjecture is deterministic across job counts") {
  RPolyEngine a, b;
  const auto r1 = klr::verify_conjecture(a, 6, {true, 1, 8});
  const auto r4 = klr::verify_conjecture(b, 6, {true, 4, 8});
  CHECK(r1.pairs_tested == r4.pairs_tested);
  REQUIRE(r1.certificates->size() == r4.certificates->size());
  for (std::size_t k = 0; k < r1.certificates->size(); ++k) {
    const auto& x = (*r1.certificates)[k];
    const auto& y = (*r4.certificates)[k];
    CHECK(x.lower == y.lower);
    CHECK(x.upper == y.upper);
    CHECK(x.factorization == y.factorization);
  }
}

TEST_CASE("verify_conjecture limits") {
  RPolyEngine engine;
  CHECK_THROWS_AS(klr::verify_conjecture(engine, 9), klr::CapacityError);
  CHECK_THROWS_AS(klr::verify_conjecture(engine, 1), std::invalid_argument);
}
