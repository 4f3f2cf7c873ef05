#pragma once

// Global bound over profiles (b_1 >= ... >= b_r >= 0):
//
//   r*  = max{ j : b_j >= j }   (0 when every b_j is 0)
//   Phi = sum_{j <= r*} (b_j + 1)(b_j + 1 - j)
//   mubar_total(a) = max over admissible profiles of sum_i mubar(a - b_i, b_i),
//
// a profile being admissible at a when Phi + r <= a and (a - b_i, b_i) is in U
// for every point.

#include "multbound/core.hpp"
#include "multbound/local_bounds.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace multbound {

class NotSorted : public DomainError {
 public:
  using DomainError::DomainError;
};

class InadmissibleProfile : public DomainError {
 public:
  using DomainError::DomainError;
};

struct Profile {
  std::vector<int> b;  // non-increasing defects, one per point

  int r() const noexcept { return static_cast<int>(b.size()); }

  friend bool operator==(const Profile&, const Profile&) = default;
};

/// "r=7, b=2×7" or "r=3, b=(2,1,0)"; the compact form is used when every
/// entry is equal.
inline std::string to_string(const Profile& p) {
  std::string out = "r=" + std::to_string(p.r()) + ", b=";
  if (!p.b.empty() && std::all_of(p.b.begin(), p.b.end(), [&](int x) { return x == p.b[0]; })) {
    return out + std::to_string(p.b[0]) + "\u00d7" + std::to_string(p.r());
  }
  out += '(';
  for (std::size_t i = 0; i < p.b.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(p.b[i]);
  }
  return out + ')';
}

namespace detail {

inline void require_sorted(const std::vector<int>& b) {
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 0) throw NotSorted("profile entries must be non-negative");
    if (i != 0 && b[i] > b[i - 1]) throw NotSorted("profile must be non-increasing");
  }
}

}  // namespace detail

inline int r_star(const std::vector<int>& b) {
  detail::require_sorted(b);
  int rs = 0;
  for (std::size_t j = 1; j <= b.size(); ++j) {
    if (b[j - 1] >= static_cast<int>(j)) rs = static_cast<int>(j);
  }
  return rs;
}

inline long long phi(const std::vector<int>& b) {
  const int rs = r_star(b);
  long long total = 0;
  for (int j = 1; j <= rs; ++j) {
    const long long bj = b[static_cast<std::size_t>(j - 1)];
    total += (bj + 1) * (bj + 1 - j);
  }
  return total;
}

inline bool is_admissible_profile(int a, const Profile& p) {
  if (p.r() < 1) return false;
  try {
    if (phi(p.b) + p.r() > a) return false;
  } catch (const NotSorted&) {
    return false;
  }
  return std::all_of(p.b.begin(), p.b.end(), [a](int bi) { return is_admissible({a - bi, bi}); });
}

inline BigInt profile_score(int a, const Profile& p) {
  if (!is_admissible_profile(a, p)) {
    throw InadmissibleProfile("profile " + to_string(p) + " is not admissible at a = " +
                              std::to_string(a));
  }
  BigInt total = 0;
  for (const int bi : p.b) total += mubar({a - bi, bi});
  return total;
}

struct GlobalOptions {
  /// Optional cap on r (N + 1 in the geometric setting); r <= a always applies.
  std::optional<int> max_points;
};

struct GlobalRow {
  int a = 0;
  BigInt value;
  /// Ascending r, then lexicographically descending tuple.
  std::vector<Profile> maximizers;
  /// Set when the row disagrees with a published value.
  std::optional<std::string> discrepancy;
};

namespace detail {

class ProfileSearch {
 public:
  ProfileSearch(int a, int max_r) : a_(a), max_r_(max_r) {
    // b(b+1) <= a  <=>  (a - b, b) in U
    int top = 0;
    while ((top + 1) * (top + 2) <= a) ++top;
    for (int b = 0; b <= top; ++b) point_score_.push_back(mubar({a - b, b}));
  }

  GlobalRow run() {
    std::vector<int> prefix;
    extend(prefix, static_cast<int>(point_score_.size()) - 1, 0, BigInt(0));
    GlobalRow row;
    row.a = a_;
    row.value = best_;
    std::sort(maximizers_.begin(), maximizers_.end(), [](const Profile& x, const Profile& y) {
      if (x.r() != y.r()) return x.r() < y.r();
      return x.b > y.b;
    });
    row.maximizers = std::move(maximizers_);
    return row;
  }

 private:
  // Phi(prefix) + |prefix| never decreases as the prefix grows, so pruning on
  // the budget is exact.
  void extend(std::vector<int>& prefix, int max_b, long long phi_so_far, const BigInt& score) {
    if (static_cast<int>(prefix.size()) == max_r_) return;
    const int j = static_cast<int>(prefix.size()) + 1;
    for (int b = max_b; b >= 0; --b) {
      const long long phi_next = phi_so_far + (b >= j ? (b + 1LL) * (b + 1 - j) : 0);
      if (phi_next + j > a_) continue;
      const BigInt next_score = score + point_score_[static_cast<std::size_t>(b)];
      prefix.push_back(b);
      record(prefix, next_score);
      extend(prefix, b, phi_next, next_score);
      prefix.pop_back();
    }
  }

  void record(const std::vector<int>& prefix, const BigInt& score) {
    if (score > best_) {
      best_ = score;
      maximizers_.clear();
    }
    if (score == best_) maximizers_.push_back(Profile{prefix});
  }

  int a_;
  int max_r_;
  std::vector<BigInt> point_score_;
  BigInt best_ = 0;
  std::vector<Profile> maximizers_;
};

}  // namespace detail

inline GlobalRow mubar_total(int a, const GlobalOptions& options = {}) {
  if (a < 1) throw DomainError("mubar_total requires a >= 1");
  int max_r = a;
  if (options.max_points) {
    if (*options.max_points < 1) throw DomainError("max_points must be >= 1");
    max_r = std::min(max_r, *options.max_points);
  }
  return detail::ProfileSearch(a, max_r).run();
}

/// Rows 1..a_max. Rows whose value differs from an entry of `published`
/// carry a discrepancy note.
inline std::vector<GlobalRow> global_table(int a_max, const std::map<int, BigInt>& published = {},
                                           const GlobalOptions& options = {}) {
  if (a_max < 1) throw DomainError("global_table requires a_max >= 1");
  std::vector<GlobalRow> rows;
  rows.reserve(static_cast<std::size_t>(a_max));
  for (int a = 1; a <= a_max; ++a) {
    GlobalRow row = mubar_total(a, options);
    if (const auto it = published.find(a); it != published.end() && it->second != row.value) {
      row.discrepancy = "computed " + row.value.str() + ", published " + it->second.str();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace multbound
