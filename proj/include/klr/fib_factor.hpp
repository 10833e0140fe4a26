#pragma once

// Certificates that a polynomial equals q^g * prod_i F_{h_i}(q^{-2}) with
// every h_i >= 2 (F_0 = F_1 = 1 are excluded so certificates are finite).

#include <optional>
#include <string>
#include <vector>

#include "klr/poly.hpp"
#include "klr/rpoly.hpp"

namespace klr {

struct FibFactorization {
  int g = 0;
  std::vector<int> hs;  // sorted descending

  IntPoly reconstruct() const;
  // "g=<g> h=[h1,h2,...]"
  std::string to_string() const;

  friend bool operator==(const FibFactorization&, const FibFactorization&) = default;
};

// First certificate under the search order (largest factor first), or nullopt.
// Throws std::invalid_argument for the zero polynomial or negative coefficients.
std::optional<FibFactorization> factor_fibonacci(const IntPoly& p);

struct ConjectureFailure {
  Permutation lower;
  Permutation upper;
  IntPoly rtilde;
};

struct Certificate {
  Permutation lower;
  Permutation upper;
  FibFactorization factorization;
};

struct ConjectureReport {
  int n = 0;
  std::size_t pairs_tested = 0;
  std::size_t successes = 0;
  std::vector<ConjectureFailure> failures;
  std::optional<std::vector<Certificate>> certificates;

  bool passed() const { return failures.empty(); }
};

struct ConjectureOptions {
  bool store_certs = false;
  int jobs = 1;
  int max_rank = 8;
};

// Every pair sigma1 <= sigma2 <= v_n, ordered by sigma2 then sigma1.
ConjectureReport verify_conjecture(RPolyEngine& engine, int n, const ConjectureOptions& opts = {});

}  // namespace klr
