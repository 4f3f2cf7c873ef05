#pragma once

// The inductive local multiplicity bound mubar(a,b) on U = {a >= b^2}:
//
//   mubar(a,0) = 1,  mubar(a,1) = a + 1,
//   a <  b(b+1):  mubar(a,b) = 2 mubar(a-(2b-1), b-1)
//   a >= b(b+1):  mubar(a,b) = mubar(a-(2b-1), b-1) + max{mubar(a-(2b-1), b-1), mubar(a-b, b)}
//
// plus the closed forms for b = 1, 2 and the tabulation with column maxima.

#include "multbound/core.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

namespace multbound {

namespace detail {

/// Process-wide memo for mubar. Lookups take a shared lock; inserts are
/// idempotent so racing writers store the same value.
class MubarCache {
 public:
  std::optional<BigInt> find(LocalPair p) const {
    std::shared_lock lock(mutex_);
    const auto it = values_.find(key(p));
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  void insert(LocalPair p, const BigInt& value) {
    std::unique_lock lock(mutex_);
    values_.emplace(key(p), value);
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return values_.size();
  }

 private:
  static std::uint64_t key(LocalPair p) noexcept {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.a)) << 32U) |
           static_cast<std::uint32_t>(p.b);
  }

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, BigInt> values_;
};

inline MubarCache& mubar_cache() {
  static MubarCache cache;
  return cache;
}

}  // namespace detail

/// Throws InadmissiblePair when a < b^2. Every recursive query goes through
/// the same check, so a sweep that completes proves the recursion never
/// leaves U.
inline BigInt mubar(LocalPair p) {
  require_admissible(p);
  if (p.b == 0) return 1;
  if (p.b == 1) return BigInt(p.a + 1);

  auto& cache = detail::mubar_cache();
  if (auto hit = cache.find(p)) return *std::move(hit);

  const LocalPair down{p.a - (2 * p.b - 1), p.b - 1};
  BigInt value;
  if (p.a < p.b * (p.b + 1)) {
    value = 2 * mubar(down);
  } else {
    const BigInt drop = mubar(down);
    const BigInt stay = mubar({p.a - p.b, p.b});
    value = drop + (drop >= stay ? drop : stay);
  }
  cache.insert(p, value);
  return value;
}

inline BigInt mubar(int a, int b) { return mubar(LocalPair{a, b}); }

inline BigInt closed_form_b1(int a) {
  if (a < 1) throw DomainError("closed_form_b1 requires a >= 1");
  return BigInt(a) + 1;
}

/// 2 + u(u-1) for a = 2u, 2 + u^2 for a = 2u + 1.
inline BigInt closed_form_b2(int a) {
  if (a < 4) throw DomainError("closed_form_b2 requires a >= 4");
  const BigInt u = a / 2;
  return (a % 2 == 0) ? 2 + u * (u - 1) : 2 + u * u;
}

struct LocalTable {
  int a_max = 0;
  int b_max = 0;
  /// Every (a,b) with 1 <= a <= a_max, 0 <= b <= b_max; nullopt marks a "*" cell.
  std::map<LocalPair, std::optional<BigInt>> cells;
  /// a -> the b attaining the column maximum (smallest b on ties).
  std::map<int, int> column_max;

  const std::optional<BigInt>& at(int a, int b) const { return cells.at(LocalPair{a, b}); }

  std::size_t defined_count() const {
    std::size_t n = 0;
    for (const auto& [pair, value] : cells) n += value.has_value() ? 1 : 0;
    return n;
  }
};

inline LocalTable local_table(int a_max, int b_max) {
  if (a_max < 1) throw DomainError("local_table requires a_max >= 1");
  if (b_max < 0) throw DomainError("local_table requires b_max >= 0");
  LocalTable table;
  table.a_max = a_max;
  table.b_max = b_max;
  for (int a = 1; a <= a_max; ++a) {
    std::optional<BigInt> best;
    int best_b = 0;
    for (int b = 0; b <= b_max; ++b) {
      const LocalPair p{a, b};
      if (!is_admissible(p)) {
        table.cells.emplace(p, std::nullopt);
        continue;
      }
      BigInt value = mubar(p);
      if (!best || value > *best) {
        best = value;
        best_b = b;
      }
      table.cells.emplace(p, std::move(value));
    }
    table.column_max.emplace(a, best_b);
  }
  return table;
}

}  // namespace multbound
