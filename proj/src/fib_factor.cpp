#include "klr/fib_factor.hpp"

#include <algorithm>
#include <set>

#include "klr/bruhat.hpp"
#include "klr/omega.hpp"
#include "klr/parallel.hpp"

namespace klr {

IntPoly FibFactorization::reconstruct() const {
  IntPoly product{1};
  for (int h : hs) product = product * q_fibonacci(h);
  return embed_qinv2(product, g);
}

std::string FibFactorization::to_string() const {
  std::string s = "g=" + std::to_string(g) + " h=[";
  for (std::size_t k = 0; k < hs.size(); ++k) s += (k ? "," : "") + std::to_string(hs[k]);
  return s + "]";
}

namespace {

// Backtracking over F_h(x) factors of `residue`, h non-increasing.
class FibonacciSearch {
 public:
  bool run(const IntPoly& residue, int max_h, std::vector<int>& hs) {
    if (residue == IntPoly{1}) return true;
    const int d = *residue.degree();
    if (d == 0) return false;
    if (failed_.contains({max_h, residue})) return false;
    for (int h = std::min(max_h, 2 * d + 1); h >= 2; --h) {
      const IntPoly f = q_fibonacci(h);
      if (*f.degree() > d) continue;
      auto quotient = exact_div(residue, f);
      if (!quotient) continue;
      hs.push_back(h);
      if (run(*quotient, h, hs)) return true;
      hs.pop_back();
    }
    failed_.insert({max_h, residue});
    return false;
  }

 private:
  std::set<std::pair<int, IntPoly>> failed_;
};

}  // namespace

std::optional<FibFactorization> factor_fibonacci(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("factor_fibonacci: zero polynomial");
  const auto coeffs = p.coeffs();
  if (std::any_of(coeffs.begin(), coeffs.end(), [](const BigInt& c) { return c < 0; })) {
    throw std::invalid_argument("factor_fibonacci: negative coefficient in " + p.to_string());
  }
  const int g = *p.degree();
  // Every F_h(x) has constant term 1, so the top coefficient must be 1, and
  // each factor steps down by q^2, so all exponents share the parity of g.
  if (p.leading() != 1) return std::nullopt;
  std::vector<BigInt> residue_coeffs;
  for (int e = g; e >= 0; --e) {
    const BigInt& c = coeffs[e];
    if ((g - e) % 2 != 0) {
      if (c != 0) return std::nullopt;
      continue;
    }
    residue_coeffs.push_back(c);
  }
  const IntPoly residue(std::move(residue_coeffs));

  std::vector<int> hs;
  FibonacciSearch search;
  if (!search.run(residue, 2 * (*residue.degree()) + 1, hs)) return std::nullopt;
  FibFactorization cert{g, std::move(hs)};
  if (!(cert.reconstruct() == p)) {
    throw std::logic_error("factor_fibonacci: certificate " + cert.to_string() +
                           " does not reconstruct " + p.to_string());
  }
  return cert;
}

ConjectureReport verify_conjecture(RPolyEngine& engine, int n, const ConjectureOptions& opts) {
  if (n < 2) throw std::invalid_argument("conjecture sweep needs n >= 2");
  if (n > opts.max_rank) {
    throw CapacityError("conjecture sweep limited to n <= " + std::to_string(opts.max_rank) +
                        ", got n = " + std::to_string(n));
  }
  const BruhatInterval interval = interval_below(v_perm(n), opts.max_rank);
  const auto& elems = interval.elements;

  struct Outcome {
    std::size_t tested = 0;
    std::vector<ConjectureFailure> failures;
    std::vector<Certificate> certs;
  };
  auto outcomes = parallel_map(elems.size(), opts.jobs, [&](std::size_t k) {
    Outcome out;
    const Permutation& upper = elems[k];
    for (const Permutation& lower : elems) {
      if (!bruhat_leq(lower, upper)) continue;
      ++out.tested;
      const IntPoly rt = engine.rtilde(lower, upper);
      auto cert = factor_fibonacci(rt);
      if (!cert) {
        out.failures.push_back({lower, upper, rt});
      } else if (opts.store_certs) {
        out.certs.push_back({lower, upper, *std::move(cert)});
      }
    }
    return out;
  });

  ConjectureReport report;
  report.n = n;
  if (opts.store_certs) report.certificates.emplace();
  for (auto& o : outcomes) {
    report.pairs_tested += o.tested;
    report.successes += o.tested - o.failures.size();
    for (auto& f : o.failures) report.failures.push_back(std::move(f));
    if (opts.store_certs)
      for (auto& c : o.certs) report.certificates->push_back(std::move(c));
  }
  return report;
}

}  // namespace klr
