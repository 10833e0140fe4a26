#include "klr/poly.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace klr {

namespace {

// One term of a rendering: sign handled by the caller.
std::string render_term(const BigInt& abs_coeff, const std::string& power) {
  if (power.empty()) return abs_coeff.str();
  if (abs_coeff == 1) return power;
  return abs_coeff.str() + power;
}

std::string int_power(int e) {
  if (e == 0) return "";
  if (e == 1) return "q";
  if (e < 0) return "q^(" + std::to_string(e) + ")";
  return "q^" + std::to_string(e);
}

std::string half_power(int k) {
  if (k % 2 == 0) return int_power(k / 2);
  return "q^(" + std::to_string(k) + "/2)";
}

void append_term(std::string& out, const BigInt& c, const std::string& power) {
  const bool neg = c < 0;
  const BigInt a = neg ? BigInt(-c) : c;
  if (out.empty()) {
    out = (neg ? "-" : "") + render_term(a, power);
  } else {
    out += neg ? " - " : " + ";
    out += render_term(a, power);
  }
}

}  // namespace

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  c_.reserve(coeffs.size());
  for (long long c : coeffs) c_.emplace_back(c);
  trim();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(BigInt c) { return IntPoly(std::vector<BigInt>{std::move(c)}); }

IntPoly IntPoly::monomial(BigInt c, int exponent) {
  if (exponent < 0) throw std::invalid_argument("IntPoly::monomial: negative exponent");
  std::vector<BigInt> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = std::move(c);
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::optional<int> IntPoly::degree() const {
  if (c_.empty()) return std::nullopt;
  return static_cast<int>(c_.size()) - 1;
}

std::optional<int> IntPoly::low_degree() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return std::nullopt;
}

BigInt IntPoly::coeff(int exponent) const {
  if (exponent < 0 || exponent >= static_cast<int>(c_.size())) return 0;
  return c_[exponent];
}

IntPoly IntPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("IntPoly::shifted: negative shift (use HalfLaurent)");
  if (is_zero()) return {};
  std::vector<BigInt> v(static_cast<std::size_t>(k));
  v.insert(v.end(), c_.begin(), c_.end());
  return IntPoly(std::move(v));
}

BigInt IntPoly::eval(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPoly(std::move(v));
}

bool operator<(const IntPoly& a, const IntPoly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  }
  return false;
}

std::string IntPoly::to_string() const {
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != 0) append_term(out, c_[i], int_power(static_cast<int>(i)));
  }
  return out.empty() ? "0" : out;
}

std::optional<IntPoly> exact_div(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw std::domain_error("exact_div: division by the zero polynomial");
  if (num.is_zero()) return IntPoly{};
  const int dn = *num.degree(), dd = *den.degree();
  if (dn < dd) return std::nullopt;
  std::vector<BigInt> rem(num.coeffs().begin(), num.coeffs().end());
  std::vector<BigInt> quot(static_cast<std::size_t>(dn - dd) + 1);
  const BigInt& lead = den.leading();
  const auto dc = den.coeffs();
  for (int k = dn - dd; k >= 0; --k) {
    const BigInt& top = rem[k + dd];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    const BigInt f = top / lead;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= f * dc[j];
    quot[k] = f;
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

// ---------------------------------------------------------------------------

HalfLaurent HalfLaurent::from_poly(const IntPoly& p) {
  HalfLaurent h;
  const auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) h.c_.emplace(static_cast<int>(2 * i), c[i]);
  return h;
}

HalfLaurent HalfLaurent::monomial(BigInt c, int half_exponent) {
  HalfLaurent h;
  if (c != 0) h.c_.emplace(half_exponent, std::move(c));
  return h;
}

BigInt HalfLaurent::coeff(int half_exponent) const {
  auto it = c_.find(half_exponent);
  return it == c_.end() ? BigInt(0) : it->second;
}

HalfLaurent HalfLaurent::shifted_half(int k) const {
  HalfLaurent h;
  for (const auto& [e, c] : c_) h.c_.emplace(e + k, c);
  return h;
}

std::optional<IntPoly> HalfLaurent::to_int_poly() const {
  if (c_.empty()) return IntPoly{};
  if (c_.begin()->first < 0) return std::nullopt;
  std::vector<BigInt> v(static_cast<std::size_t>(c_.rbegin()->first / 2) + 1);
  for (const auto& [e, c] : c_) {
    if (e % 2 != 0) return std::nullopt;
    v[e / 2] = c;
  }
  return IntPoly(std::move(v));
}

HalfLaurent& HalfLaurent::operator+=(const HalfLaurent& o) {
  for (const auto& [e, c] : o.c_) {
    auto [it, inserted] = c_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

HalfLaurent operator*(const HalfLaurent& a, const HalfLaurent& b) {
  HalfLaurent out;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) out += HalfLaurent::monomial(ca * cb, ea + eb);
  return out;
}

std::string HalfLaurent::to_string() const {
  std::string out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) append_term(out, it->second, half_power(it->first));
  return out.empty() ? "0" : out;
}

HalfLaurent substitute_x(const IntPoly& p) {
  // Horner in x = q^{1/2} - q^{-1/2}.
  const HalfLaurent x = HalfLaurent::monomial(1, 1) + HalfLaurent::monomial(-1, -1);
  HalfLaurent acc;
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + HalfLaurent::monomial(c[i], 0);
  return acc;
}

// ---------------------------------------------------------------------------

namespace {

struct FibonacciCache {
  std::shared_mutex mutex;
  std::vector<IntPoly> values{IntPoly{1}, IntPoly{1}};
};

FibonacciCache& fib_cache() {
  static FibonacciCache cache;
  return cache;
}

struct BinomialCache {
  std::mutex mutex;
  std::vector<std::vector<BigInt>> rows{{1}};
};

BinomialCache& binomial_cache() {
  static BinomialCache cache;
  return cache;
}

}  // namespace

IntPoly q_fibonacci(int m) {
  if (m < 0) throw std::invalid_argument("q_fibonacci: negative index");
  auto& cache = fib_cache();
  {
    std::shared_lock lock(cache.mutex);
    if (m < static_cast<int>(cache.values.size())) return cache.values[m];
  }
  std::unique_lock lock(cache.mutex);
  auto& v = cache.values;
  while (static_cast<int>(v.size()) <= m) {
    const std::size_t k = v.size();
    v.push_back(v[k - 1] + v[k - 2].shifted(1));
  }
  return v[m];
}

IntPoly embed_qinv2(const IntPoly& p, int lead) {
  if (p.is_zero()) return {};
  const int deg = *p.degree();
  if (lead < 2 * deg) {
    throw std::invalid_argument("embed_qinv2: q^" + std::to_string(lead) +
                                " too small for degree " + std::to_string(deg));
  }
  std::vector<BigInt> v(static_cast<std::size_t>(lead) + 1);
  const auto c = p.coeffs();
  for (int k = 0; k <= deg; ++k) v[lead - 2 * k] = c[k];
  return IntPoly(std::move(v));
}

IntPoly fib_in_qinv2(int m, int lead) { return embed_qinv2(q_fibonacci(m), lead); }

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  auto& cache = binomial_cache();
  std::lock_guard lock(cache.mutex);
  auto& rows = cache.rows;
  while (static_cast<int>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<BigInt> row(prev.size() + 1);
    row.front() = 1;
    row.back() = 1;
    for (std::size_t j = 1; j + 1 < row.size(); ++j) row[j] = prev[j - 1] + prev[j];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

}  // namespace klr
