#pragma once

// Closed-form expressions for R~-polynomials below v_n = 3 4 ... n 1 2 and
// v_{n,i} = 3 4 ... i n (i+1) ... (n-1) 1 2, together with the drivers that
// sweep them against the recurrence engine.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "klr/omega.hpp"
#include "klr/poly.hpp"
#include "klr/rpoly.hpp"

namespace klr {

// Largest rank accepted by the sweeping drivers unless overridden.
inline constexpr int kSweepCapacity = 8;

// T_n(q) = q^{2n-4} F_{n-2}(q^{-2}) = R~_{e,v_n}(q). T_2 = 1, T_3 = q^2.
IntPoly t_poly(int n);

// T_n == q^2 T_{n-2} + q^2 T_{n-1} for n >= 4, using `t` for the three values.
bool check_t_recurrence(int n, const std::function<IntPoly(int)>& t = t_poly);

// q^{g(w)} T_{h(w)}. Throws std::domain_error if h(w) < 2.
IntPoly theorem_main_rhs(int n, const OmegaSubword& w);

// q^{2n - l(sigma) - 4} F_{h(w)-2}(q^{-2}). Throws std::invalid_argument if w
// does not express sigma and std::domain_error if the expression is not a
// polynomial (h(w) < 2 or exponent too small for the Fibonacci degree).
IntPoly corollary_rhs(int n, const Permutation& sigma, const OmegaSubword& w);

Permutation v_ni_perm(int n, int i);

// omega_word(n) followed by s_{n-3} s_{n-4} ... s_{i-1}. Throws
// std::logic_error if the result is not a reduced word for v_ni_perm(n, i).
Word v_ni_word(int n, int i);

// sum_k q^{3n-i-2k-5} C(n-i-1, k) F_{n-k-2}(q^{-2}). Also evaluates
// sum_k q^{n-i-1} C(n-i-1, k) T_{n-k} and throws std::logic_error if the two
// disagree.
IntPoly theorem_vni_rhs(int n, int i);

struct Mismatch {
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct VerificationReport {
  std::string theorem;
  int n = 0;
  std::optional<int> i;
  std::string subject_label = "cases";  // what `subjects` counts
  std::size_t subjects = 0;
  std::size_t checks = 0;
  std::vector<Mismatch> mismatches;

  bool passed() const { return mismatches.empty(); }
  std::string summary() const;
};

enum class Theorem { kMain, kCorollary, kVni, kLl, kTRecurrence, kRelation, kLemmas };

std::optional<Theorem> parse_theorem(std::string_view name);
std::string_view theorem_name(Theorem t);

struct SweepOptions {
  int jobs = 1;
  int max_rank = kSweepCapacity;
};

// R~_{s_{i_1}...s_{i_k}, v_n} == q^k T_{n-k} for every increasing sequence
// i-1 <= i_1 < ... < i_k <= n-3.
VerificationReport check_eq_ll(RPolyEngine& engine, int n, int i);

// rtilde_to_r == rpoly over all ordered pairs of S_n.
VerificationReport check_bridge_exhaustive(RPolyEngine& engine, int n, const SweepOptions& opts = {});
// rtilde_to_r == rpoly over `count` random comparable pairs of S_n.
VerificationReport check_bridge_random(RPolyEngine& engine, int n, std::size_t count,
                                       std::uint64_t seed, const SweepOptions& opts = {});

// Runs one theorem's sweep at rank n. Throws CapacityError when n exceeds
// opts.max_rank and std::invalid_argument when n is below the theorem's range.
// Mismatches are collected, never thrown.
VerificationReport verify_theorem(RPolyEngine& engine, Theorem theorem, int n,
                                  const SweepOptions& opts = {});

struct SigmaRow {
  Permutation sigma;
  int length;
  int d;
  int h;
  int g;
  IntPoly rtilde;
};

// One row per sigma <= v_n, statistics taken from its first Omega_n subword.
std::vector<SigmaRow> sigma_table(RPolyEngine& engine, int n, const SweepOptions& opts = {});

}  // namespace klr
