#pragma once

// Exact polynomial arithmetic over the integers.
//
// IntPoly holds a dense polynomial in q with arbitrary-precision
// coefficients. HalfLaurent holds a sparse Laurent polynomial in q^{1/2};
// exponents are stored as integers in units of 1/2, so q^{3/2} has key 3.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace klr {

using BigInt = boost::multiprecision::cpp_int;

class IntPoly {
 public:
  IntPoly() = default;  // zero polynomial
  IntPoly(std::initializer_list<long long> coeffs);  // lowest degree first
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly constant(BigInt c);
  static IntPoly monomial(BigInt c, int exponent);

  bool is_zero() const { return c_.empty(); }
  std::optional<int> degree() const;
  std::optional<int> low_degree() const;
  BigInt coeff(int exponent) const;
  std::span<const BigInt> coeffs() const { return c_; }
  const BigInt& leading() const { return c_.back(); }

  // Multiply by q^k; k must be nonnegative.
  IntPoly shifted(int k) const;
  BigInt eval(const BigInt& x) const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  // Total order (by degree, then coefficients from the top) for use as a map key.
  friend bool operator<(const IntPoly& a, const IntPoly& b);

  // "q^4 + 2q^2 - 1"; zero renders as "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Quotient when den * quotient == num exactly over Z, nullopt otherwise.
// Throws std::domain_error if den is zero.
std::optional<IntPoly> exact_div(const IntPoly& num, const IntPoly& den);

class HalfLaurent {
 public:
  HalfLaurent() = default;
  static HalfLaurent from_poly(const IntPoly& p);
  static HalfLaurent monomial(BigInt c, int half_exponent);

  bool is_zero() const { return c_.empty(); }
  const std::map<int, BigInt>& terms() const { return c_; }
  BigInt coeff(int half_exponent) const;

  // Multiply by q^{k/2}.
  HalfLaurent shifted_half(int k) const;

  // Lossless conversion when all exponents are integral and nonnegative.
  std::optional<IntPoly> to_int_poly() const;

  HalfLaurent& operator+=(const HalfLaurent& o);
  friend HalfLaurent operator+(HalfLaurent a, const HalfLaurent& b) { return a += b; }
  friend HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b);
  friend bool operator==(const HalfLaurent&, const HalfLaurent&) = default;

  // "q^(1/2) - q^(-1/2)"
  std::string to_string() const;

 private:
  std::map<int, BigInt> c_;
};

// p evaluated at x = q^{1/2} - q^{-1/2}.
HalfLaurent substitute_x(const IntPoly& p);

// q-Fibonacci numbers: F_0 = F_1 = 1, F_m = F_{m-1} + q F_{m-2}. Cached.
IntPoly q_fibonacci(int m);

// q^lead * p(q^{-2}); requires lead >= 2 deg p.
IntPoly embed_qinv2(const IntPoly& p, int lead);

// q^lead * F_m(q^{-2}); requires lead >= 2 floor(m/2).
IntPoly fib_in_qinv2(int m, int lead);

// Exact binomial coefficient via Pascal's rule (cached rows).
BigInt binomial(int n, int k);

}  // namespace klr
