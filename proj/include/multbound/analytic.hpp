#pragma once

// Analytic majorants for the word count at (a,b):
//
//   stirling(a,b) = 2^b (a - b(b-1)/2)^b / (b!)^2                (exact)
//   u_b = 1/(2 pi b) * ((2a - b(b-1)) / b^2 * e^2)^b
//   v_b = 1/(2 pi b) * (5a / (3 b^2) * e^2)^b                    (a >= 17)
//   w_b = 1/(2 pi b) * (2a / b^2 * e^2)^b
//
// and the per-unit-degree bounds in s = floor(sqrt(a)):
//
//   e^2 / (2 pi s) * (2 e^2)^s,   e^2 / (2 pi s) * (5/3 e^2)^s   (a >= 17).
//
// Floats are binary64. Powers are formed in log space and exponentiated at
// the end, so comparisons can stay on logarithms when the value overflows.

#include "multbound/core.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

namespace multbound {

inline constexpr double kStirlingRelTol = 1e-12;
inline constexpr double kMubarVsURelTol = 1e-9;

inline int floor_sqrt(int a) {
  if (a < 0) throw DomainError("floor_sqrt of a negative number");
  int s = static_cast<int>(std::sqrt(static_cast<double>(a)));
  while (static_cast<long long>(s) * s > a) --s;
  while (static_cast<long long>(s + 1) * (s + 1) <= a) ++s;
  return s;
}

namespace detail {

inline void require_b_in_range(int a, int b) {
  if (a < 1 || b < 1 || b > floor_sqrt(a)) {
    throw DomainError("analytic bound requires 1 <= b <= floor(sqrt(a)), got (" +
                      std::to_string(a) + "," + std::to_string(b) + ")");
  }
}

/// log of 1/(2 pi b) * (base * e^2)^b
inline double log_majorant(int b, double log_base) {
  return -std::log(2.0 * std::numbers::pi * b) + b * (log_base + 2.0);
}

}  // namespace detail

inline double log_u_bound(int a, int b) {
  detail::require_b_in_range(a, b);
  const double numer = 2.0 * a - static_cast<double>(b) * (b - 1);
  return detail::log_majorant(b, std::log(numer) - 2.0 * std::log(static_cast<double>(b)));
}

inline double log_v_bound(int a, int b) {
  detail::require_b_in_range(a, b);
  if (a < 17) throw DomainError("v_bound requires a >= 17");
  return detail::log_majorant(b, std::log(5.0 * a / (3.0 * b * b)));
}

inline double log_w_bound(int a, int b) {
  detail::require_b_in_range(a, b);
  return detail::log_majorant(b, std::log(2.0 * a / (static_cast<double>(b) * b)));
}

inline double u_bound(int a, int b) { return std::exp(log_u_bound(a, b)); }
inline double v_bound(int a, int b) { return std::exp(log_v_bound(a, b)); }
inline double w_bound(int a, int b) { return std::exp(log_w_bound(a, b)); }

inline Rational stirling_bound(int a, int b) {
  require_admissible({a, b});
  // 2^b (a - b(b-1)/2)^b = (2a - b(b-1))^b
  const BigInt side = BigInt(2) * a - BigInt(b) * (b - 1);
  const BigInt fact = factorial(static_cast<unsigned>(b));
  return Rational(pow_int(side, static_cast<unsigned>(b)), fact * fact);
}

inline double sqrt_degree_bound(int a) {
  if (a < 1) throw DomainError("sqrt_degree_bound requires a >= 1");
  const int s = floor_sqrt(a);
  const double e2 = std::numbers::e * std::numbers::e;
  return std::exp(std::log(e2 / (2.0 * std::numbers::pi * s)) + s * std::log(2.0 * e2));
}

inline double sqrt_degree_bound_refined(int a) {
  if (a < 17) throw DomainError("sqrt_degree_bound_refined requires a >= 17");
  const int s = floor_sqrt(a);
  const double e2 = std::numbers::e * std::numbers::e;
  return std::exp(std::log(e2 / (2.0 * std::numbers::pi * s)) + s * std::log(5.0 / 3.0 * e2));
}

struct AnalyticReport {
  int a = 0;
  int b = 0;
  double u = 0;
  std::optional<double> v;  // a >= 17
  double w = 0;
  Rational stirling;
  double sqrt_degree = 0;
  std::optional<double> sqrt_degree_refined;  // a >= 17
};

inline AnalyticReport analytic_report(int a, int b) {
  detail::require_b_in_range(a, b);
  AnalyticReport r;
  r.a = a;
  r.b = b;
  r.u = u_bound(a, b);
  r.w = w_bound(a, b);
  r.stirling = stirling_bound(a, b);
  r.sqrt_degree = sqrt_degree_bound(a);
  if (a >= 17) {
    r.v = v_bound(a, b);
    r.sqrt_degree_refined = sqrt_degree_bound_refined(a);
  }
  return r;
}

namespace detail {

inline Context pair_context(int a, int b) {
  return {{"a", std::to_string(a)}, {"b", std::to_string(b)}};
}

/// exact <= float, with the float side widened by rel_tol. Falls back to
/// comparing logarithms when the float overflows.
inline BoundCertificate certify_exact_le_float(std::string claim_id, const Quantity& exact,
                                               double log_float, Context context,
                                               double rel_tol) {
  const double value = std::exp(log_float);
  if (std::isfinite(value)) {
    return certify(std::move(claim_id), exact, Relation::LessEqual, value, std::move(context),
                   rel_tol);
  }
  const double log_exact = log_of(as_rational(exact));
  context.emplace("space", "log");
  context.emplace("rel_tol", format_double(rel_tol));
  const bool holds = log_exact <= log_float + std::log1p(rel_tol);
  return BoundCertificate{std::move(claim_id), log_exact, log_float, Relation::LessEqual, holds,
                          std::move(context)};
}

}  // namespace detail

inline BoundCertificate verify_u_dominates_stirling(int a, int b) {
  require_admissible({a, b});
  if (b < 1) throw DomainError("verify_u_dominates_stirling requires b >= 1");
  return detail::certify_exact_le_float("stirling-le-u", stirling_bound(a, b), log_u_bound(a, b),
                                        detail::pair_context(a, b), kStirlingRelTol);
}

inline BoundCertificate verify_mubar_le_u(const BigInt& mubar_value, int a, int b) {
  require_admissible({a, b});
  if (b < 1) throw DomainError("verify_mubar_le_u requires b >= 1");
  return detail::certify_exact_le_float("mubar-le-u", mubar_value, log_u_bound(a, b),
                                        detail::pair_context(a, b), kMubarVsURelTol);
}

/// For every a <= a_max and b with b + 1 <= floor(sqrt(a)) and
/// 2a - b(b+1) >= (5/2)(b+1)^2, certifies u_b < u_{b+1}. Compared on
/// logarithms, strictly, without tolerance.
inline std::vector<BoundCertificate> u_monotonicity_scan(int a_max) {
  if (a_max < 4) throw DomainError("u_monotonicity_scan requires a_max >= 4");
  std::vector<BoundCertificate> out;
  for (int a = 1; a <= a_max; ++a) {
    const int s = floor_sqrt(a);
    for (int b = 1; b + 1 <= s; ++b) {
      const long long lhs = 4LL * a - 2LL * b * (b + 1);
      if (lhs < 5LL * (b + 1) * (b + 1)) continue;
      Context ctx = detail::pair_context(a, b);
      ctx.emplace("space", "log");
      out.push_back(certify("u-increasing", log_u_bound(a, b), Relation::Less,
                            log_u_bound(a, b + 1), std::move(ctx)));
    }
  }
  return out;
}

/// argmax of u_b over 1 <= b <= floor(sqrt(a)); smallest b on ties.
inline int u_argmax(int a) {
  const int s = floor_sqrt(a);
  if (s < 1) throw DomainError("u_argmax requires a >= 1");
  int best = 1;
  double best_log = log_u_bound(a, 1);
  for (int b = 2; b <= s; ++b) {
    const double l = log_u_bound(a, b);
    if (l > best_log) {
      best_log = l;
      best = b;
    }
  }
  return best;
}

/// 2a - b_max(b_max - 1) <= (5/3) a, exactly.
inline BoundCertificate u_argmax_bound(int a) {
  if (a < 17) throw DomainError("u_argmax_bound requires a >= 17");
  const int b = u_argmax(a);
  return certify("u-argmax-budget", BigInt(2LL * a - static_cast<long long>(b) * (b - 1)),
                 Relation::LessEqual, Rational(BigInt(5) * a, BigInt(3)),
                 {{"a", std::to_string(a)}, {"b_max", std::to_string(b)}});
}

}  // namespace multbound
