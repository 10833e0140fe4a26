#pragma once

// Permutations of S_n in one-line notation and words in the simple
// transpositions s_i = (i, i+1).
//
// Composition convention: a word s_{i_1} ... s_{i_k} is evaluated left to
// right by right multiplication, and right multiplication by s_i swaps the
// entries at positions i and i+1. With this convention the right descents of
// p are exactly {i : p(i) > p(i+1)}.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "klr/error.hpp"

namespace klr {

inline constexpr int kMaxRank = 16;

class Permutation {
 public:
  // entries are the values p(1), ..., p(n); must be a bijection on {1..n}.
  explicit Permutation(std::span<const int> entries);
  Permutation(std::initializer_list<int> entries);

  static Permutation identity(int n);

  // Accepts "3412" or "3,4,1,2". The comma form is required for n >= 10.
  static Permutation parse(std::string_view text);

  int rank() const { return n_; }
  int operator()(int i) const { return e_[i - 1]; }  // 1-based
  std::vector<int> entries() const;

  int length() const;
  bool is_identity() const;
  bool has_right_descent(int i) const { return e_[i - 1] > e_[i]; }
  std::vector<int> right_descents() const;

  // p * s_i
  Permutation times_s(int i) const;
  // (p * r)(j) = p(r(j))
  Permutation operator*(const Permutation& r) const;
  Permutation inverse() const;

  // Injective 4-bit-per-entry packing of the one-line form (fixed rank).
  std::uint64_t code() const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

 private:
  Permutation() = default;

  std::array<std::uint8_t, kMaxRank> e_{};
  std::uint8_t n_ = 0;
};

class Word {
 public:
  Word(int rank, std::vector<int> letters);
  explicit Word(int rank) : Word(rank, {}) {}

  // Space-separated generator indices, e.g. "2 1 3 2".
  static Word parse(std::string_view text, int rank);

  int rank() const { return n_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t k) const { return letters_[k]; }

  Word operator+(const Word& other) const;

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  int n_;
  std::vector<int> letters_;
};

Permutation evaluate(const Word& w);
bool is_reduced(const Word& w);

// All reduced expressions of p, sorted lexicographically. Exponential in
// length(p); intended for n <= 7.
std::vector<Word> reduced_words(const Permutation& p);

// A single reduced expression of p (lexicographically largest descent peeled
// first from the right).
Word some_reduced_word(const Permutation& p);

// Words reachable from w by exactly one commutation or braid move. Throws
// std::invalid_argument if w is not reduced.
std::vector<Word> braid_neighbors(const Word& w);

// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace klr
