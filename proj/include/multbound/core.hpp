#pragma once

// Shared domain types: admissible pairs, family parameters, error types and
// machine-readable bound certificates.

#include "multbound/exact.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace multbound {

// --- Errors ---

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised for (a,b) outside U = {a >= b^2}; the "*" cells of the table.
class InadmissiblePair : public DomainError {
 public:
  InadmissiblePair(long long a, long long b)
      : DomainError("inadmissible pair (" + std::to_string(a) + "," + std::to_string(b) +
                    "): a < b^2"),
        a_(a),
        b_(b) {}
  long long a() const noexcept { return a_; }
  long long b() const noexcept { return b_; }

 private:
  long long a_;
  long long b_;
};

class StructuralError : public DomainError {
 public:
  using DomainError::DomainError;
};

// --- LocalPair ---

struct LocalPair {
  int a = 0;  // codimension budget
  int b = 0;  // rank defect

  friend bool operator==(const LocalPair&, const LocalPair&) = default;
  friend auto operator<=>(const LocalPair&, const LocalPair&) = default;
};

constexpr bool is_admissible(LocalPair p) noexcept {
  return p.a >= 0 && p.b >= 0 &&
         static_cast<long long>(p.a) >= static_cast<long long>(p.b) * p.b;
}

inline void require_admissible(LocalPair p) {
  if (!is_admissible(p)) throw InadmissiblePair(p.a, p.b);
}

// --- FamilyParams ---

/// Complete intersection of k1 quadrics and k2 cubics: dimension M = k1 + 2 k2,
/// degree d = 2^k1 3^k2. Construction enforces M >= 4.
class FamilyParams {
 public:
  FamilyParams(int k1, int k2) : k1_(k1), k2_(k2) {
    if (k1 < 0 || k2 < 0) throw DomainError("family parameters must be non-negative");
    if (k1 + 2 * k2 < 4) {
      throw DomainError("family (" + std::to_string(k1) + "," + std::to_string(k2) +
                        ") has M = k1 + 2 k2 < 4");
    }
  }

  int k1() const noexcept { return k1_; }
  int k2() const noexcept { return k2_; }
  int k() const noexcept { return k1_ + k2_; }
  int M() const noexcept { return k1_ + 2 * k2_; }
  BigInt d() const {
    return pow_int(2, static_cast<unsigned>(k1_)) * pow_int(3, static_cast<unsigned>(k2_));
  }

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;

 private:
  int k1_;
  int k2_;
};

// --- BoundCertificate ---

enum class Relation { Less, LessEqual, Equal };

inline const char* relation_symbol(Relation r) noexcept {
  switch (r) {
    case Relation::Less: return "<";
    case Relation::LessEqual: return "<=";
    case Relation::Equal: return "=";
  }
  return "?";
}

inline Relation parse_relation(const std::string& text) {
  if (text == "<") return Relation::Less;
  if (text == "<=") return Relation::LessEqual;
  if (text == "=") return Relation::Equal;
  throw DomainError("unknown relation '" + text + "'");
}

/// One side of a certified inequality. Floats appear only for the analytic
/// majorants; everything else is exact.
using Quantity = std::variant<BigInt, Rational, double>;

inline std::string to_string(const Quantity& q) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else {
          return multbound::to_string(v);
        }
      },
      q);
}

inline bool is_exact(const Quantity& q) noexcept { return !std::holds_alternative<double>(q); }

inline Rational as_rational(const Quantity& q) {
  if (const auto* i = std::get_if<BigInt>(&q)) return Rational(*i);
  if (const auto* r = std::get_if<Rational>(&q)) return *r;
  throw DomainError("as_rational: float quantity");
}

inline double as_double(const Quantity& q) {
  if (const auto* f = std::get_if<double>(&q)) return *f;
  return as_rational(q).convert_to<double>();
}

using Context = std::map<std::string, std::string>;

struct BoundCertificate {
  std::string claim_id;
  Quantity lhs;
  Quantity rhs;
  Relation relation = Relation::LessEqual;
  bool holds = false;
  Context context;
};

/// Evaluates `lhs relation rhs`. Exact when both sides are exact; when a float
/// is involved the right-hand side is widened by `rel_tol` (relative), and the
/// tolerance is recorded in the context.
inline BoundCertificate certify(std::string claim_id, Quantity lhs, Relation relation,
                                Quantity rhs, Context context = {}, double rel_tol = 0.0) {
  bool holds = false;
  if (is_exact(lhs) && is_exact(rhs)) {
    const Rational l = as_rational(lhs);
    const Rational r = as_rational(rhs);
    switch (relation) {
      case Relation::Less: holds = l < r; break;
      case Relation::LessEqual: holds = l <= r; break;
      case Relation::Equal: holds = l == r; break;
    }
  } else {
    const double l = as_double(lhs);
    const double r = as_double(rhs);
    const double slack = rel_tol * std::fabs(r);
    switch (relation) {
      case Relation::Less: holds = l < r + slack; break;
      case Relation::LessEqual: holds = l <= r + slack; break;
      case Relation::Equal: holds = std::fabs(l - r) <= slack; break;
    }
    context.emplace("rel_tol", format_double(rel_tol));
  }
  return BoundCertificate{std::move(claim_id), std::move(lhs), std::move(rhs), relation, holds,
                          std::move(context)};
}

}  // namespace multbound
