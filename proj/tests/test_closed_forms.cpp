#include <doctest.h>

#include "klr/bruhat.hpp"
#include "klr/closed_forms.hpp"
#include "oracles.hpp"

using klr::IntPoly;
using klr::Permutation;
using klr::RPolyEngine;
using klr::Theorem;

namespace {
Permutation P(const char* s) { return Permutation::parse(s); }
IntPoly from(const oracle::Coeffs& c) { return IntPoly(std::vector<klr::BigInt>(c.begin(), c.end())); }

klr::OmegaSubword subword_at(int n, std::vector<int> positions) {
  for (const auto& [sigma, list] : klr::all_reduced_subwords(n))
    for (const auto& s : list)
      if (s.positions == positions) return s;
  throw std::logic_error("no such subword");
}
}  // namespace

TEST_CASE("t_poly") {
  CHECK(klr::t_poly(2) == IntPoly{1});
  CHECK(klr::t_poly(3) == IntPoly{0, 0, 1});
  CHECK(klr::t_poly(4) == IntPoly{0, 0, 1, 0, 1});
  CHECK_THROWS_AS(klr::t_poly(1), std::invalid_argument);
  for (int n = 2; n <= 14; ++n) CHECK(klr::t_poly(n) == from(oracle::fib_qinv2(n - 2, 2 * n - 4)));
}

TEST_CASE("t_poly is R~ at the identity") {
  RPolyEngine engine;
  for (int n = 3; n <= 8; ++n)
    CHECK(engine.rtilde(Permutation::identity(n), klr::v_perm(n)) == klr::t_poly(n));
}

TEST_CASE("T recurrence") {
  for (int n = 4; n <= 12; ++n) CHECK(klr::check_t_recurrence(n));
  // A perturbed T must be rejected.
  auto perturbed = [](int n) { return n == 6 ? klr::t_poly(6) + IntPoly{0, 1} : klr::t_poly(n); };
  CHECK_FALSE(klr::check_t_recurrence(6, perturbed));
  CHECK_FALSE(klr::check_t_recurrence(7, perturbed));
  CHECK(klr::check_t_recurrence(5, perturbed));
  CHECK_THROWS_AS(klr::check_t_recurrence(3), std::invalid_argument);
}

TEST_CASE("theorem_main_rhs") {
  for (int n = 3; n <= 7; ++n) {
    CHECK(klr::theorem_main_rhs(n, subword_at(n, {})) == klr::t_poly(n));
    std::vector<int> all(2 * (n - 2));
    std::iota(all.begin(), all.end(), 1);
    CHECK(klr::theorem_main_rhs(n, subword_at(n, all)) == IntPoly{1});
  }
  CHECK(klr::theorem_main_rhs(4, subword_at(4, {1})) == IntPoly{0, 0, 0, 1});
}

TEST_CASE("corollary_rhs") {
  const auto empty = subword_at(4, {});
  CHECK(klr::corollary_rhs(4, Permutation::identity(4), empty) == IntPoly{0, 0, 1, 0, 1});
  CHECK(klr::corollary_rhs(4, P("3412"), subword_at(4, {1, 2, 3, 4})) == IntPoly{1});
  CHECK(klr::corollary_rhs(4, P("1324"), subword_at(4, {1})) == IntPoly{0, 0, 0, 1});
  CHECK_THROWS_AS(klr::corollary_rhs(4, P("3412"), empty), std::invalid_argument);
}

TEST_CASE("v_ni_perm and v_ni_word") {
  CHECK(klr::v_ni_perm(5, 4) == P("34512"));
  CHECK(klr::v_ni_perm(5, 2) == P("53412"));
  CHECK(klr::v_ni_perm(6, 4) == P("346512"));
  CHECK(klr::v_ni_perm(4, 2) == P("4312"));
  CHECK(klr::v_ni_word(5, 2) == klr::Word(5, {2, 1, 3, 2, 4, 3, 2, 1}));
  CHECK_THROWS_AS(klr::v_ni_perm(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(klr::v_ni_perm(5, 1), std::invalid_argument);
  for (int n = 3; n <= 9; ++n) {
    CHECK(klr::v_ni_perm(n, n - 1) == klr::v_perm(n));
    for (int i = 2; i <= n - 1; ++i) {
      const auto w = klr::v_ni_word(n, i);
      CHECK(klr::is_reduced(w));
      CHECK(klr::evaluate(w) == klr::v_ni_perm(n, i));
    }
  }
}

TEST_CASE("theorem_vni_rhs") {
  CHECK(klr::theorem_vni_rhs(4, 2) == IntPoly{0, 0, 0, 2, 0, 1});
  CHECK(klr::theorem_vni_rhs(4, 2).degree() == P("4312").length());
  RPolyEngine engine;
  for (int n = 3; n <= 8; ++n) {
    CHECK(klr::theorem_vni_rhs(n, n - 1) == klr::t_poly(n));
    for (int i = 2; i <= n - 1; ++i)
      CHECK(klr::theorem_vni_rhs(n, i) == engine.rtilde(Permutation::identity(n), klr::v_ni_perm(n, i)));
  }
}

TEST_CASE("check_eq_ll") {
  RPolyEngine engine;
  const auto r = klr::check_eq_ll(engine, 5, 2);
  CHECK(r.subjects == 4);
  CHECK(r.passed());
  for (int i = 2; i <= 5; ++i) CHECK(klr::check_eq_ll(engine, 6, i).passed());
}

TEST_CASE("verify_theorem") {
  RPolyEngine engine;
  const auto main4 = klr::verify_theorem(engine, Theorem::kMain, 4);
  CHECK(main4.subjects == 14);
  CHECK(main4.passed());
  CHECK(klr::verify_theorem(engine, Theorem::kMain, 3).subjects == 4);
  CHECK(klr::verify_theorem(engine, Theorem::kVni, 5).passed());
  CHECK(klr::verify_theorem(engine, Theorem::kCorollary, 5).passed());
  CHECK(klr::verify_theorem(engine, Theorem::kLl, 5).passed());
  CHECK(klr::verify_theorem(engine, Theorem::kTRecurrence, 20).passed());
  CHECK(klr::verify_theorem(engine, Theorem::kRelation, 4).checks == 576);
  CHECK(klr::verify_theorem(engine, Theorem::kLemmas, 5).passed());
  CHECK(main4.summary() == "main n=4: sigma swept: 14, checks: " + std::to_string(main4.checks) +
                               ", mismatches: 0");

  CHECK_THROWS_AS(klr::verify_theorem(engine, Theorem::kMain, 9), klr::CapacityError);
  CHECK_THROWS_AS(klr::verify_theorem(engine, Theorem::kMain, 2), std::invalid_argument);
  CHECK_THROWS_AS(klr::verify_theorem(engine, Theorem::kTRecurrence, 3), std::invalid_argument);
}

TEST_CASE("sweeps are deterministic across job counts") {
  RPolyEngine a, b;
  klr::SweepOptions one{1, klr::kSweepCapacity}, four{4, klr::kSweepCapacity};
  const auto r1 = klr::verify_theorem(a, Theorem::kMain, 6, one);
  const auto r4 = klr::verify_theorem(b, Theorem::kMain, 6, four);
  CHECK(r1.summary() == r4.summary());
  const auto t1 = klr::sigma_table(a, 6, one);
  const auto t4 = klr::sigma_table(b, 6, four);
  REQUIRE(t1.size() == t4.size());
  for (std::size_t k = 0; k < t1.size(); ++k) {
    CHECK(t1[k].sigma == t4[k].sigma);
    CHECK(t1[k].rtilde == t4[k].rtilde);
  }
}

TEST_CASE("theorem names") {
  for (auto t : {Theorem::kMain, Theorem::kCorollary, Theorem::kVni, Theorem::kLl,
                 Theorem::kTRecurrence, Theorem::kRelation, Theorem::kLemmas})
    CHECK(klr::parse_theorem(klr::theorem_name(t)) == t);
  CHECK_FALSE(klr::parse_theorem("nope").has_value());
}
