#include "klr/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

namespace klr {

namespace {

void check_rank(int n) {
  if (n < 1 || n > kMaxRank) {
    throw std::invalid_argument("rank must be in 1.." + std::to_string(kMaxRank) +
                                ", got " + std::to_string(n));
  }
}

}  // namespace

Permutation::Permutation(std::span<const int> entries) {
  const int n = static_cast<int>(entries.size());
  check_rank(n);
  std::array<bool, kMaxRank + 1> seen{};
  for (int i = 0; i < n; ++i) {
    const int x = entries[i];
    if (x < 1 || x > n) {
      throw std::invalid_argument("entry " + std::to_string(x) + " at position " +
                                  std::to_string(i + 1) + " outside 1.." + std::to_string(n));
    }
    if (seen[x]) {
      throw std::invalid_argument("entry " + std::to_string(x) + " repeated at position " +
                                  std::to_string(i + 1));
    }
    seen[x] = true;
    e_[i] = static_cast<std::uint8_t>(x);
  }
  n_ = static_cast<std::uint8_t>(n);
}

Permutation::Permutation(std::initializer_list<int> entries)
    : Permutation(std::span<const int>(entries.begin(), entries.size())) {}

Permutation Permutation::identity(int n) {
  check_rank(n);
  Permutation p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int i = 0; i < n; ++i) p.e_[i] = static_cast<std::uint8_t>(i + 1);
  return p;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  if (text.empty()) throw ParseError("empty permutation");
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = text.find(',', pos);
      const std::string_view token =
          text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      int value = 0;
      const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
        throw ParseError("invalid permutation '" + std::string(text) + "': bad entry '" +
                         std::string(token) + "' at character " + std::to_string(pos + 1));
      }
      values.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c < '1' || c > '9') {
        throw ParseError("invalid permutation '" + std::string(text) + "': unexpected character '" +
                         std::string(1, c) + "' at position " + std::to_string(i + 1));
      }
      values.push_back(c - '0');
    }
    if (values.size() >= 10) {
      throw ParseError("invalid permutation '" + std::string(text) +
                       "': ranks >= 10 need the comma-separated form");
    }
  }
  if (static_cast<int>(values.size()) > kMaxRank) {
    throw ParseError("invalid permutation '" + std::string(text) + "': rank above " +
                     std::to_string(kMaxRank));
  }
  try {
    return Permutation(values);
  } catch (const std::invalid_argument& e) {
    throw ParseError("invalid permutation '" + std::string(text) + "': " + e.what());
  }
}

std::vector<int> Permutation::entries() const { return {e_.begin(), e_.begin() + n_}; }

int Permutation::length() const {
  int inv = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (e_[i] > e_[j]) ++inv;
  return inv;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < n_; ++i)
    if (e_[i] != i + 1) return false;
  return true;
}

std::vector<int> Permutation::right_descents() const {
  std::vector<int> out;
  for (int i = 1; i < n_; ++i)
    if (has_right_descent(i)) out.push_back(i);
  return out;
}

Permutation Permutation::times_s(int i) const {
  if (i < 1 || i >= n_) {
    throw std::out_of_range("generator s_" + std::to_string(i) + " outside rank " +
                            std::to_string(n_));
  }
  Permutation r = *this;
  std::swap(r.e_[i - 1], r.e_[i]);
  return r;
}

Permutation Permutation::operator*(const Permutation& r) const {
  if (n_ != r.n_) throw RankMismatch(n_, r.n_);
  Permutation out;
  out.n_ = n_;
  for (int j = 0; j < n_; ++j) out.e_[j] = e_[r.e_[j] - 1];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.n_ = n_;
  for (int j = 0; j < n_; ++j) out.e_[e_[j] - 1] = static_cast<std::uint8_t>(j + 1);
  return out;
}

std::uint64_t Permutation::code() const {
  std::uint64_t c = 0;
  for (int i = 0; i < n_; ++i) c |= static_cast<std::uint64_t>(e_[i] - 1) << (4 * i);
  return c;
}

std::string Permutation::to_string() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (n_ >= 10 && i > 0) s += ',';
    s += std::to_string(e_[i]);
  }
  return s;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.e_.begin(), a.e_.begin() + a.n_, b.e_.begin(),
                                                b.e_.begin() + b.n_);
}

// ---------------------------------------------------------------------------

Word::Word(int rank, std::vector<int> letters) : n_(rank), letters_(std::move(letters)) {
  check_rank(rank);
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (letters_[k] < 1 || letters_[k] > n_ - 1) {
      throw std::invalid_argument("letter " + std::to_string(letters_[k]) + " at position " +
                                  std::to_string(k + 1) + " outside 1.." +
                                  std::to_string(n_ - 1));
    }
  }
}

Word Word::parse(std::string_view text, int rank) {
  std::vector<int> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view token = text.substr(pos, end - pos);
    int value = 0;
    const auto [last, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || last != token.data() + token.size()) {
      throw ParseError("invalid word '" + std::string(text) + "': bad letter '" +
                       std::string(token) + "' at character " + std::to_string(pos + 1));
    }
    if (value < 1 || value > rank - 1) {
      throw ParseError("invalid word '" + std::string(text) + "': letter " +
                       std::to_string(value) + " at character " + std::to_string(pos + 1) +
                       " outside 1.." + std::to_string(rank - 1));
    }
    letters.push_back(value);
    pos = end;
  }
  return Word(rank, std::move(letters));
}

Word Word::operator+(const Word& other) const {
  if (n_ != other.n_) throw RankMismatch(n_, other.n_);
  std::vector<int> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(n_, std::move(out));
}

std::string Word::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(letters_[k]);
  }
  return s;
}

Permutation evaluate(const Word& w) {
  Permutation p = Permutation::identity(w.rank());
  for (int i : w.letters()) p = p.times_s(i);
  return p;
}

bool is_reduced(const Word& w) {
  // Reduced iff every letter raises the length, i.e. creates an ascent swap.
  Permutation p = Permutation::identity(w.rank());
  for (int i : w.letters()) {
    if (p.has_right_descent(i)) return false;
    p = p.times_s(i);
  }
  return true;
}

namespace {

void collect_reduced(const Permutation& p, std::map<std::uint64_t, std::vector<std::vector<int>>>& memo,
                     std::vector<std::vector<int>>& out) {
  if (auto it = memo.find(p.code()); it != memo.end()) {
    out = it->second;
    return;
  }
  std::vector<std::vector<int>> words;
  if (p.is_identity()) {
    words.emplace_back();
  } else {
    for (int i : p.right_descents()) {
      std::vector<std::vector<int>> sub;
      collect_reduced(p.times_s(i), memo, sub);
      for (auto& w : sub) {
        w.push_back(i);
        words.push_back(std::move(w));
      }
    }
  }
  memo.emplace(p.code(), words);
  out = std::move(words);
}

}  // namespace

std::vector<Word> reduced_words(const Permutation& p) {
  std::map<std::uint64_t, std::vector<std::vector<int>>> memo;
  std::vector<std::vector<int>> raw;
  collect_reduced(p, memo, raw);
  std::vector<Word> out;
  out.reserve(raw.size());
  for (auto& w : raw) out.emplace_back(p.rank(), std::move(w));
  std::sort(out.begin(), out.end());
  return out;
}

Word some_reduced_word(const Permutation& p) {
  std::vector<int> letters;
  Permutation cur = p;
  while (!cur.is_identity()) {
    const int i = cur.right_descents().back();
    letters.push_back(i);
    cur = cur.times_s(i);
  }
  std::reverse(letters.begin(), letters.end());
  return Word(p.rank(), std::move(letters));
}

std::vector<Word> braid_neighbors(const Word& w) {
  if (!is_reduced(w)) throw std::invalid_argument("braid_neighbors: word is not reduced");
  std::set<std::vector<int>> found;
  const auto letters = w.letters();
  for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
    const int a = letters[k], b = letters[k + 1];
    if (std::abs(a - b) > 1) {
      std::vector<int> next(letters.begin(), letters.end());
      std::swap(next[k], next[k + 1]);
      found.insert(std::move(next));
    }
    if (k + 2 < letters.size() && std::abs(a - b) == 1 && letters[k + 2] == a) {
      std::vector<int> next(letters.begin(), letters.end());
      next[k] = b;
      next[k + 1] = a;
      next[k + 2] = b;
      found.insert(std::move(next));
    }
  }
  std::vector<Word> out;
  for (const auto& f : found) out.emplace_back(w.rank(), f);
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

}  // namespace klr
