#pragma once

// Memoized R- and R~-polynomials on S_n.
//
// Both are computed by the descent recurrences: for s a right descent of v,
//   R~_{u,v} = R~_{us,vs}                 if s is a descent of u,
//            = R~_{us,vs} + q R~_{u,vs}    otherwise,
//   R_{u,v}  = R_{us,vs}                  if s is a descent of u,
//            = q R_{us,vs} + (q-1) R_{u,vs} otherwise,
// with value 1 on the diagonal and 0 when u is not below v. The smallest
// descent of v is always used, so memo contents are reproducible.

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "klr/permutation.hpp"
#include "klr/poly.hpp"

namespace klr {

struct PairKey {
  std::uint8_t rank = 0;
  std::uint64_t u = 0;
  std::uint64_t v = 0;

  static PairKey of(const Permutation& u, const Permutation& v);
  friend bool operator==(const PairKey&, const PairKey&) = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const noexcept;
};

enum class RKind { kTilde, kClassic };

// Sharded, mutex-guarded memo table. Inserts are idempotent: the first value
// stored for a key wins and later writers must agree with it.
class RCache {
 public:
  std::optional<IntPoly> find(RKind kind, const PairKey& key) const;
  void insert(RKind kind, const PairKey& key, const IntPoly& value);
  std::size_t size(RKind kind) const;
  void clear();

  // Cache file: the line "RPOLYCACHE v1" followed by one record per R~ entry,
  // "<rank> <u> <v> <c0,c1,...>" with coefficients lowest degree first.
  // load() returns the number of records read; a missing file reads as empty.
  std::size_t load(const std::filesystem::path& path);
  // Writes to a sibling temporary file and renames it into place.
  void save(const std::filesystem::path& path) const;

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<PairKey, IntPoly, PairKeyHash> table;
  };
  std::array<Shard, kShards> tilde_;
  std::array<Shard, kShards> classic_;

  const std::array<Shard, kShards>& shards(RKind kind) const {
    return kind == RKind::kTilde ? tilde_ : classic_;
  }
  std::array<Shard, kShards>& shards(RKind kind) {
    return kind == RKind::kTilde ? tilde_ : classic_;
  }
};

class RPolyEngine {
 public:
  RPolyEngine() = default;
  RPolyEngine(const RPolyEngine&) = delete;
  RPolyEngine& operator=(const RPolyEngine&) = delete;

  IntPoly rtilde(const Permutation& u, const Permutation& v);
  IntPoly rpoly(const Permutation& u, const Permutation& v);

  // One top-level step of the R~ recurrence with the given descent s of v,
  // deeper levels use the default choice. Throws if s is not a descent of v.
  IntPoly rtilde_via(const Permutation& u, const Permutation& v, int s);

  // q^{(l(v)-l(u))/2} R~_{u,v}(q^{1/2} - q^{-1/2}), expanded exactly. Returns
  // zero when u is not below v. Throws std::logic_error if the expansion
  // leaves half-integral or negative exponents.
  IntPoly rtilde_to_r(const Permutation& u, const Permutation& v);

  RCache& cache() { return cache_; }
  const RCache& cache() const { return cache_; }

 private:
  IntPoly rtilde_step(const Permutation& u, const Permutation& v, int s);
  RCache cache_;
};

}  // namespace klr
