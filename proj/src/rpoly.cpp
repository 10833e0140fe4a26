#include "klr/rpoly.hpp"

#include <fstream>
#include <sstream>

#include "klr/bruhat.hpp"

namespace klr {

PairKey PairKey::of(const Permutation& u, const Permutation& v) {
  if (u.rank() != v.rank()) throw RankMismatch(u.rank(), v.rank());
  return {static_cast<std::uint8_t>(u.rank()), u.code(), v.code()};
}

std::size_t PairKeyHash::operator()(const PairKey& k) const noexcept {
  std::uint64_t h = k.u * 0x9E3779B97F4A7C15ull;
  h ^= (k.v + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2));
  h ^= static_cast<std::uint64_t>(k.rank) * 0xC2B2AE3D27D4EB4Full;
  h ^= h >> 29;
  return static_cast<std::size_t>(h);
}

// --- RCache -----------------------------------------------------------------

std::optional<IntPoly> RCache::find(RKind kind, const PairKey& key) const {
  const auto& shard = shards(kind)[PairKeyHash{}(key) % kShards];
  std::lock_guard lock(shard.mutex);
  if (auto it = shard.table.find(key); it != shard.table.end()) return it->second;
  return std::nullopt;
}

void RCache::insert(RKind kind, const PairKey& key, const IntPoly& value) {
  auto& shard = shards(kind)[PairKeyHash{}(key) % kShards];
  std::lock_guard lock(shard.mutex);
  auto [it, inserted] = shard.table.emplace(key, value);
  if (!inserted && !(it->second == value)) {
    throw std::logic_error("RCache: conflicting values stored for one pair");
  }
}

std::size_t RCache::size(RKind kind) const {
  std::size_t total = 0;
  for (const auto& shard : shards(kind)) {
    std::lock_guard lock(shard.mutex);
    total += shard.table.size();
  }
  return total;
}

void RCache::clear() {
  for (auto* group : {&tilde_, &classic_}) {
    for (auto& shard : *group) {
      std::lock_guard lock(shard.mutex);
      shard.table.clear();
    }
  }
}

namespace {

constexpr const char* kCacheMagic = "RPOLYCACHE v1";

Permutation decode(std::uint64_t code, int rank) {
  std::vector<int> e(rank);
  for (int i = 0; i < rank; ++i) e[i] = static_cast<int>((code >> (4 * i)) & 0xF) + 1;
  return Permutation(e);
}

}  // namespace

std::size_t RCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return 0;
  std::string line;
  if (!std::getline(in, line) || line != kCacheMagic) {
    throw ParseError(path.string() + ":1: missing '" + kCacheMagic + "' header");
  }
  std::size_t count = 0, lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto fail = [&](const std::string& why) {
      return ParseError(path.string() + ":" + std::to_string(lineno) + ": " + why);
    };
    std::istringstream ss(line);
    int rank = 0;
    std::string us, vs, cs;
    if (!(ss >> rank >> us >> vs >> cs)) throw fail("expected '<rank> <u> <v> <coeffs>'");
    try {
      const Permutation u = Permutation::parse(us);
      const Permutation v = Permutation::parse(vs);
      if (u.rank() != rank || v.rank() != rank) throw fail("rank field disagrees with permutations");
      std::vector<BigInt> coeffs;
      std::istringstream cstream(cs);
      std::string tok;
      while (std::getline(cstream, tok, ',')) coeffs.emplace_back(tok);
      insert(RKind::kTilde, PairKey::of(u, v), IntPoly(std::move(coeffs)));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw fail(e.what());
    }
    ++count;
  }
  return count;
}

void RCache::save(const std::filesystem::path& path) const {
  struct Record {
    PairKey key;
    IntPoly value;
  };
  std::vector<Record> records;
  for (const auto& shard : tilde_) {
    std::lock_guard lock(shard.mutex);
    for (const auto& [k, p] : shard.table) records.push_back({k, p});
  }
  std::sort(records.begin(), records.end(), [](const Record& a, const Record& b) {
    return std::tie(a.key.rank, a.key.v, a.key.u) < std::tie(b.key.rank, b.key.v, b.key.u);
  });

  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << kCacheMagic << '\n';
    for (const auto& r : records) {
      out << int(r.key.rank) << ' ' << decode(r.key.u, r.key.rank).to_string() << ' '
          << decode(r.key.v, r.key.rank).to_string() << ' ';
      const auto c = r.value.coeffs();
      if (c.empty()) out << '0';
      for (std::size_t i = 0; i < c.size(); ++i) out << (i ? "," : "") << c[i];
      out << '\n';
    }
    if (!out.flush()) throw std::runtime_error("failed writing cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

// --- RPolyEngine --------------------------------------------------------------

IntPoly RPolyEngine::rtilde(const Permutation& u, const Permutation& v) {
  if (u.rank() != v.rank()) throw RankMismatch(u.rank(), v.rank());
  if (u == v) return IntPoly{1};
  if (!bruhat_leq(u, v)) return {};
  const PairKey key = PairKey::of(u, v);
  if (auto hit = cache_.find(RKind::kTilde, key)) return *std::move(hit);
  IntPoly result = rtilde_step(u, v, v.right_descents().front());
  cache_.insert(RKind::kTilde, key, result);
  return result;
}

IntPoly RPolyEngine::rtilde_step(const Permutation& u, const Permutation& v, int s) {
  const Permutation vs = v.times_s(s);
  const Permutation us = u.times_s(s);
  if (u.has_right_descent(s)) return rtilde(us, vs);
  return rtilde(us, vs) + rtilde(u, vs).shifted(1);
}

IntPoly RPolyEngine::rtilde_via(const Permutation& u, const Permutation& v, int s) {
  if (u.rank() != v.rank()) throw RankMismatch(u.rank(), v.rank());
  if (s < 1 || s >= v.rank() || !v.has_right_descent(s)) {
    throw std::invalid_argument("s_" + std::to_string(s) + " is not a right descent of " +
                                v.to_string());
  }
  if (u == v) return IntPoly{1};
  if (!bruhat_leq(u, v)) return {};
  return rtilde_step(u, v, s);
}

IntPoly RPolyEngine::rpoly(const Permutation& u, const Permutation& v) {
  if (u.rank() != v.rank()) throw RankMismatch(u.rank(), v.rank());
  if (u == v) return IntPoly{1};
  if (!bruhat_leq(u, v)) return {};
  const PairKey key = PairKey::of(u, v);
  if (auto hit = cache_.find(RKind::kClassic, key)) return *std::move(hit);
  const int s = v.right_descents().front();
  const Permutation vs = v.times_s(s);
  const Permutation us = u.times_s(s);
  IntPoly result;
  if (u.has_right_descent(s)) {
    result = rpoly(us, vs);
  } else {
    const IntPoly lower = rpoly(u, vs);
    result = rpoly(us, vs).shifted(1) + lower.shifted(1) - lower;
  }
  cache_.insert(RKind::kClassic, key, result);
  return result;
}

IntPoly RPolyEngine::rtilde_to_r(const Permutation& u, const Permutation& v) {
  const IntPoly rt = rtilde(u, v);
  if (rt.is_zero()) return {};
  // (l(v) - l(u)) / 2 in half units is just l(v) - l(u).
  const HalfLaurent expanded = substitute_x(rt).shifted_half(v.length() - u.length());
  auto r = expanded.to_int_poly();
  if (!r) {
    throw std::logic_error("rtilde_to_r(" + u.to_string() + ", " + v.to_string() +
                           "): non-polynomial result " + expanded.to_string());
  }
  return *std::move(r);
}

}  // namespace klr
