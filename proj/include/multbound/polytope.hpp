#pragma once

// Lattice points of Delta = {x >= 0, b x1 + (b-1) x2 + ... + x_b <= a - b^2}
// and the volume of the enlargement Delta+ (budget a - b(b-1)/2).

#include "multbound/core.hpp"

#include <span>
#include <vector>

namespace multbound {

/// {x in Z_{>=0}^b : sum_i (b - i + 1) x_i <= budget}, coordinates 1-based in the formula.
struct SimplexSpec {
  int b = 1;
  long long budget = 0;

  bool nonempty() const noexcept { return budget >= 0; }

  /// Weight of coordinate i (0-based): b, b-1, ..., 1.
  int weight(std::size_t i) const noexcept { return b - static_cast<int>(i); }

  bool contains(std::span<const long long> x) const {
    if (x.size() != static_cast<std::size_t>(b)) return false;
    long long total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] < 0) return false;
      total += weight(i) * x[i];
    }
    return total <= budget;
  }
};

inline SimplexSpec delta_simplex(int a, int b) {
  if (b < 1) throw DomainError("simplex dimension b must be >= 1");
  require_admissible({a, b});
  return SimplexSpec{b, static_cast<long long>(a) - static_cast<long long>(b) * b};
}

namespace detail {

inline void count_points(const SimplexSpec& s, std::size_t i, long long remaining, BigInt& count) {
  if (i == static_cast<std::size_t>(s.b)) {
    ++count;
    return;
  }
  const long long w = s.weight(i);
  for (long long x = 0; x * w <= remaining; ++x) count_points(s, i + 1, remaining - x * w, count);
}

}  // namespace detail

inline BigInt lattice_count(const SimplexSpec& s) {
  BigInt count = 0;
  if (s.nonempty()) detail::count_points(s, 0, s.budget, count);
  return count;
}

/// Number of integer points of Delta for the pair (a,b); exhaustive enumeration.
inline BigInt lattice_count(int a, int b) { return lattice_count(delta_simplex(a, b)); }

/// vol(Delta+) = (a - b(b-1)/2)^b / (b!)^2.
inline Rational volume_plus(int a, int b) {
  if (b < 1) throw DomainError("volume_plus requires b >= 1");
  const long long half = static_cast<long long>(b) * (b - 1) / 2;
  if (a < half) throw DomainError("volume_plus requires a >= b(b-1)/2");
  const BigInt side = BigInt(a) - half;
  const BigInt fact = factorial(static_cast<unsigned>(b));
  return Rational(pow_int(side, static_cast<unsigned>(b)), fact * fact);
}

inline BoundCertificate verify_lattice_volume_bound(int a, int b) {
  require_admissible({a, b});
  return certify("lattice-count-le-volume", lattice_count(a, b), Relation::LessEqual,
                 volume_plus(a, b), {{"a", std::to_string(a)}, {"b", std::to_string(b)}});
}

}  // namespace multbound
