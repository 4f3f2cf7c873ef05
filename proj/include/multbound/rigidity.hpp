#pragma once

// Family-level arithmetic for complete intersections of type 2^k1 3^k2.
//
// The line threshold is 2^(k-4) 3^(k2-1) per unit degree. A family passes the
// numeric gate when mubar_total(M) stays at or below it; for M beyond the
// direct range the majorant 3 * 2^(M-6) is used instead.
//
// The hypertangent ledger replays the multiplicity chain for a codimension
// three subvariety Q with m = mult_o Q and D = deg Q:
//
//   mult_o C = H m,  deg C <= G D            H = 2^(k-2) 3^(k2-2), G = 2^(k2-2)
//   delta <= L m                             L = 2^(k-4) 3^(k2-1)
//   H m - delta <= 2/3 (G D - delta)    =>   delta >= 3H m - 2G D
//   L m >= 3H m - 2G D                  =>   m <= 2G / (3H - L) D = (8/d) D

#include "multbound/core.hpp"
#include "multbound/global_bounds.hpp"

#include <string>
#include <vector>

namespace multbound {

inline Rational r3_threshold(const FamilyParams& f) {
  return pow_signed(2, f.k() - 4) * pow_signed(3, f.k2() - 1);
}

inline Context family_context(const FamilyParams& f) {
  return {{"k1", std::to_string(f.k1())}, {"k2", std::to_string(f.k2())},
          {"M", std::to_string(f.M())}};
}

struct LedgerReport {
  FamilyParams family;
  BigInt d;
  BigInt hypertangent_multiplier;  // H
  BigInt degree_multiplier;        // G
  Rational post_hypertangent_ratio;
  Rational line_bound_coefficient;  // L
  Rational delta_mult_coefficient;  // 3H
  Rational delta_degree_coefficient;  // 2G
  Rational final_coefficient;
  bool contradiction = false;
  /// The chain as printed writes mult_o C_{>=2} with exponent k2 - 3; only
  /// k2 - 2 reproduces the printed lower bound on delta.
  bool exponent_discrepancy = false;
  std::string exponent_note;
  std::vector<BoundCertificate> certificates;
};

inline LedgerReport hypertangent_ledger(const FamilyParams& f) {
  if (f.k2() < 2) {
    throw StructuralError("hypertangent ledger requires k2 >= 2 (got k2 = " +
                          std::to_string(f.k2()) + ")");
  }
  const int k = f.k();
  const int k2 = f.k2();
  const BigInt d = f.d();
  const Rational eight_over_d(BigInt(8), d);

  const BigInt H = pow_int(2, static_cast<unsigned>(k - 2)) * pow_int(3, static_cast<unsigned>(k2 - 2));
  const BigInt G = pow_int(2, static_cast<unsigned>(k2 - 2));
  const Rational L = pow_signed(2, k - 4) * pow_signed(3, k2 - 1);

  LedgerReport r{f, d, H, G, {}, L, {}, {}, {}, false, false, {}, {}};
  r.post_hypertangent_ratio = Rational(H, G) * eight_over_d;
  r.delta_mult_coefficient = Rational(3 * H);
  r.delta_degree_coefficient = Rational(2 * G);
  const Rational combined = r.delta_mult_coefficient - L;
  r.final_coefficient = r.delta_degree_coefficient / combined;
  r.contradiction = r.final_coefficient <= eight_over_d;

  const Context ctx = family_context(f);
  auto& certs = r.certificates;
  certs.push_back(certify("post-hypertangent-ratio", r.post_hypertangent_ratio, Relation::Equal,
                          Rational(8, 9), ctx));
  certs.push_back(certify("curve-constant-below-ratio", Rational(2, 3), Relation::Less,
                          r.post_hypertangent_ratio, ctx));
  certs.push_back(certify("delta-lower-bound-mult", r.delta_mult_coefficient, Relation::Equal,
                          pow_signed(2, k - 2) * pow_signed(3, k2 - 1), ctx));
  certs.push_back(certify("delta-lower-bound-degree", r.delta_degree_coefficient,
                          Relation::Equal, pow_signed(2, k2 - 1), ctx));
  certs.push_back(certify("combined-mult-coefficient", combined, Relation::Equal,
                          pow_signed(2, k - 4) * pow_signed(3, k2), ctx));
  certs.push_back(
      certify("final-coefficient", r.final_coefficient, Relation::Equal, eight_over_d, ctx));

  // Replay with the exponent as printed: 3 * 2^(k-2) 3^(k2-3) against the
  // printed 2^(k-2) 3^(k2-1).
  const Rational printed_variant = 3 * pow_signed(2, k - 2) * pow_signed(3, k2 - 3);
  r.exponent_discrepancy = printed_variant != pow_signed(2, k - 2) * pow_signed(3, k2 - 1);
  if (r.exponent_discrepancy) {
    r.exponent_note =
        "mult_o C_{>=2} printed with 3^(k2-3) gives delta >= " + to_string(printed_variant) +
        " m - " + to_string(r.delta_degree_coefficient) + " D, not the printed " +
        to_string(r.delta_mult_coefficient) + " m; exponent k2-2 used";
  }
  return r;
}

enum class VerdictStatus {
  EstablishedDirect,
  EstablishedAsymptotic,
  NotEstablishedNumeric,
  NotCoveredStructural,
};

inline const char* status_name(VerdictStatus s) noexcept {
  switch (s) {
    case VerdictStatus::EstablishedDirect: return "established_direct";
    case VerdictStatus::EstablishedAsymptotic: return "established_asymptotic";
    case VerdictStatus::NotEstablishedNumeric: return "not_established_numeric";
    case VerdictStatus::NotCoveredStructural: return "not_covered_structural";
  }
  return "?";
}

constexpr bool is_established(VerdictStatus s) noexcept {
  return s == VerdictStatus::EstablishedDirect || s == VerdictStatus::EstablishedAsymptotic;
}

struct Verdict {
  FamilyParams family;
  VerdictStatus status = VerdictStatus::NotCoveredStructural;
  /// threshold - bound, per unit degree.
  Rational margin;
  BigInt bound;
  Rational threshold;
  std::vector<BoundCertificate> evidence;
  std::vector<std::string> notes;
};

inline constexpr int kDefaultDirectRange = 40;

inline BigInt total_power_majorant(int a) {
  return 3 * pow_int(2, static_cast<unsigned>(a - 6));
}

inline Verdict check_family(const FamilyParams& f, int a_max_direct = kDefaultDirectRange) {
  if (a_max_direct < 12) throw DomainError("a_max_direct must be >= 12");
  Verdict v{f, VerdictStatus::NotCoveredStructural, {}, {}, r3_threshold(f), {}, {}};
  const int M = f.M();
  Context ctx = family_context(f);

  const bool direct = M <= a_max_direct;
  if (direct) {
    v.bound = mubar_total(M).value;
    ctx.emplace("route", "direct");
    v.evidence.push_back(certify("total-bound-le-threshold", v.bound, Relation::LessEqual,
                                 v.threshold, ctx));
  } else {
    // M > a_max_direct >= 12, inside the range of the power majorant.
    v.bound = total_power_majorant(M);
    ctx.emplace("route", "majorant");
    v.evidence.push_back(certify("total-majorant-le-threshold", v.bound, Relation::LessEqual,
                                 v.threshold, ctx));
  }
  v.margin = v.threshold - Rational(v.bound);

  if (f.k2() < 2) {
    v.status = VerdictStatus::NotCoveredStructural;
    v.notes.push_back("k2 < 2: the hypertangent construction needs k2 - 2 cubic divisors");
    return v;
  }
  v.notes.push_back(
      "maximal singularities of codimension 2 and 3 are excluded geometrically; assumed here");
  if (!v.evidence.back().holds) {
    v.status = VerdictStatus::NotEstablishedNumeric;
  } else {
    v.status = direct ? VerdictStatus::EstablishedDirect : VerdictStatus::EstablishedAsymptotic;
  }
  return v;
}

inline BoundCertificate check_total_power_bound(int a) {
  if (a < 12) throw DomainError("check_total_power_bound requires a >= 12");
  return certify("total-le-power-majorant", mubar_total(a).value, Relation::LessEqual,
                 total_power_majorant(a), {{"a", std::to_string(a)}});
}

struct SmallFamilyTriple {
  int a;
  int n1;
  int n2;
};

inline constexpr SmallFamilyTriple kSmallFamilyTriples[] = {
    {11, 5, 3}, {11, 3, 4}, {11, 1, 5}, {10, 2, 4}, {10, 0, 5}};

inline std::vector<BoundCertificate> check_small_family_triples() {
  std::vector<BoundCertificate> out;
  for (const auto& t : kSmallFamilyTriples) {
    const Rational threshold = pow_signed(2, t.n1 + t.n2 - 4) * pow_signed(3, t.n2 - 1);
    out.push_back(certify("small-family-total-le-threshold", mubar_total(t.a).value,
                          Relation::LessEqual, threshold,
                          {{"a", std::to_string(t.a)},
                           {"n1", std::to_string(t.n1)},
                           {"n2", std::to_string(t.n2)}}));
  }
  return out;
}

}  // namespace multbound
