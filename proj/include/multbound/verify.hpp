#pragma once

// The full certificate run: every numeric claim grouped by acceptance
// criterion, checked against the published tables.

#include "multbound/analytic.hpp"
#include "multbound/core.hpp"
#include "multbound/global_bounds.hpp"
#include "multbound/local_bounds.hpp"
#include "multbound/polytope.hpp"
#include "multbound/published.hpp"
#include "multbound/rigidity.hpp"
#include "multbound/words.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <string>
#include <vector>

namespace multbound {

struct VerifyOptions {
  /// Multiplies the property grids (words a <= 60, recursion a <= 200,
  /// lattice a <= 120, analytic scans a <= 500). Published-table ranges are fixed.
  double grid_scale = 1.0;
};

struct CriterionResult {
  int number = 0;
  std::string id;
  std::string title;
  double budget_seconds = 0;
  double seconds = 0;  // wall time; not part of any emitted document
  std::vector<BoundCertificate> certificates;
  std::vector<std::string> notes;

  std::size_t failed_count() const {
    return static_cast<std::size_t>(std::count_if(
        certificates.begin(), certificates.end(), [](const auto& c) { return !c.holds; }));
  }
  bool passed() const { return !certificates.empty() && failed_count() == 0; }
};

struct VerifyBundle {
  VerifyOptions options;
  std::vector<CriterionResult> criteria;

  bool all_hold() const {
    return std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.passed(); });
  }
};

namespace detail {

inline int scaled(int base, double scale) {
  return std::max(1, static_cast<int>(std::lround(base * scale)));
}

inline Context ab(int a, int b) { return {{"a", std::to_string(a)}, {"b", std::to_string(b)}}; }

inline BoundCertificate certify_flag(std::string claim_id, bool ok, Context ctx) {
  return certify(std::move(claim_id), BigInt(ok ? 1 : 0), Relation::Equal, BigInt(1),
                 std::move(ctx));
}

template <class Fn>
CriterionResult timed(int number, std::string id, std::string title, double budget, Fn&& body) {
  CriterionResult r;
  r.number = number;
  r.id = std::move(id);
  r.title = std::move(title);
  r.budget_seconds = budget;
  const auto start = std::chrono::steady_clock::now();
  body(r);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline void local_table_match(const PublishedTables& published, CriterionResult& out) {
  int a_max = 1;
  int b_max = 0;
  for (const auto& cell : published.local) {
    a_max = std::max(a_max, cell.a);
    b_max = std::max(b_max, cell.b);
  }
  const LocalTable table = local_table(a_max, b_max);

  std::size_t defined = 0;
  for (const auto& cell : published.local) {
    Context ctx = ab(cell.a, cell.b);
    ctx.emplace("source", cell.source);
    if (cell.value) {
      ++defined;
      out.certificates.push_back(
          certify("local-cell", mubar({cell.a, cell.b}), Relation::Equal, *cell.value, ctx));
      continue;
    }
    bool raised = false;
    try {
      (void)mubar({cell.a, cell.b});
    } catch (const InadmissiblePair&) {
      raised = true;
    }
    out.certificates.push_back(certify_flag("local-star-cell-inadmissible", raised, ctx));
  }
  for (const auto& cell : published.local) {
    if (!cell.column_max) continue;
    out.certificates.push_back(certify("local-column-max", BigInt(table.column_max.at(cell.a)),
                                       Relation::Equal, BigInt(cell.b),
                                       {{"a", std::to_string(cell.a)}}));
  }
  out.notes.push_back(std::to_string(defined) + " defined cells, " +
                      std::to_string(published.local.size() - defined) + " '*' cells");
}

inline void closed_forms(int a_max, CriterionResult& out) {
  for (int a = 1; a <= a_max; ++a) {
    out.certificates.push_back(
        certify("closed-form-b1", mubar({a, 1}), Relation::Equal, closed_form_b1(a), ab(a, 1)));
  }
  for (int a = 4; a <= a_max; ++a) {
    out.certificates.push_back(
        certify("closed-form-b2", mubar({a, 2}), Relation::Equal, closed_form_b2(a), ab(a, 2)));
  }
}

inline void words_vs_recursion(int a_max, CriterionResult& out) {
  for (int a = 0; a <= a_max; ++a) {
    for (int b = 0; b * b <= a; ++b) {
      const WordState root{a, b};
      const auto words = worst_case_words(root);
      const BigInt count(words.size());
      out.certificates.push_back(
          certify("word-count-eq-mubar", count, Relation::Equal, mubar(root), ab(a, b)));
      out.certificates.push_back(
          certify_flag("word-images-prefix-free", check_prefix_free(words), ab(a, b)));
      if (b == 0) continue;

      const SimplexSpec delta = delta_simplex(a, b);
      std::set<PositionEncoding> encodings;
      std::size_t inside = 0;
      for (const Word& w : words) {
        auto enc = encode_positions(w, root);
        inside += delta.contains(enc.m) ? 1 : 0;
        encodings.insert(std::move(enc));
      }
      out.certificates.push_back(certify("position-encoding-injective", BigInt(encodings.size()),
                                         Relation::Equal, count, ab(a, b)));
      out.certificates.push_back(certify("position-encoding-in-simplex", BigInt(inside),
                                         Relation::Equal, count, ab(a, b)));
      out.certificates.push_back(certify("word-count-le-lattice-bound", count,
                                         Relation::LessEqual,
                                         pow_int(2, static_cast<unsigned>(b)) * lattice_count(delta),
                                         ab(a, b)));
    }
  }
}

inline void lattice_volume(int a_max, CriterionResult& out) {
  for (int a = 1; a <= a_max; ++a) {
    for (int b = 1; b <= 8 && b * b <= a; ++b) {
      out.certificates.push_back(verify_lattice_volume_bound(a, b));
    }
  }
}

inline void analytic_chain(int grid_a_max, int scan_a_max, CriterionResult& out) {
  for (int a = 1; a <= grid_a_max; ++a) {
    for (int b = 1; b <= 8 && b * b <= a; ++b) {
      out.certificates.push_back(verify_u_dominates_stirling(a, b));
    }
  }
  auto scan = u_monotonicity_scan(scan_a_max);
  out.notes.push_back("u increasing: " + std::to_string(scan.size()) + " (a,b) pairs in range");
  for (auto& c : scan) out.certificates.push_back(std::move(c));
  for (int a = 17; a <= scan_a_max; ++a) out.certificates.push_back(u_argmax_bound(a));
  for (int a = 1; a <= 36; ++a) {
    for (int b = 1; b * b <= a; ++b) {
      out.certificates.push_back(verify_mubar_le_u(mubar({a, b}), a, b));
    }
  }
}

inline void global_table_match(const PublishedTables& published, CriterionResult& out) {
  int a_max = 1;
  for (const auto& row : published.global) a_max = std::max(a_max, row.a);
  const auto rows = global_table(a_max, published.global_values());
  for (const auto& p : published.global) {
    const GlobalRow& row = rows.at(static_cast<std::size_t>(p.a - 1));
    Context ctx{{"a", std::to_string(p.a)}, {"source", p.source}};
    if (p.excluded) {
      out.notes.push_back("a=" + std::to_string(p.a) + " excluded: " +
                          row.discrepancy.value_or("no discrepancy"));
      out.certificates.push_back(
          certify_flag("global-excluded-row-annotated", row.discrepancy.has_value(), ctx));
      continue;
    }
    out.certificates.push_back(certify("global-row", row.value, Relation::Equal, p.value, ctx));
    const bool found = std::find(row.maximizers.begin(), row.maximizers.end(), p.maximizer) !=
                       row.maximizers.end();
    ctx.emplace("profile", to_string(p.maximizer));
    out.certificates.push_back(certify_flag("global-printed-maximizer", found, ctx));
    if (row.discrepancy) {
      out.notes.push_back("a=" + std::to_string(p.a) + ": " + *row.discrepancy + " (maximizer " +
                          to_string(row.maximizers.front()) + ")");
    }
  }
}

inline void power_bounds(CriterionResult& out) {
  for (int a = 12; a <= 36; ++a) out.certificates.push_back(check_total_power_bound(a));
  for (auto& c : check_small_family_triples()) out.certificates.push_back(std::move(c));
}

inline void family_reconstruction(CriterionResult& out) {
  const std::set<std::pair<int, int>> small{{5, 3}, {3, 4}, {1, 5}, {2, 4}, {0, 5}};
  for (int M = 4; M <= 36; ++M) {
    for (int k2 = 0; 2 * k2 <= M; ++k2) {
      const FamilyParams f(M - 2 * k2, k2);
      const Verdict v = check_family(f);
      Context ctx = family_context(f);
      ctx.emplace("status", status_name(v.status));
      if (k2 <= 1) {
        out.certificates.push_back(certify_flag(
            "family-structural", v.status == VerdictStatus::NotCoveredStructural, ctx));
      } else if (M >= 10 && M <= 11) {
        const bool expected = small.count({f.k1(), f.k2()}) != 0;
        out.certificates.push_back(certify("family-small-verdict",
                                           BigInt(is_established(v.status) ? 1 : 0),
                                           Relation::Equal, BigInt(expected ? 1 : 0), ctx));
      } else if (M >= 12) {
        out.certificates.push_back(
            certify_flag("family-established", is_established(v.status), ctx));
      }
    }
  }
}

inline void ledger_universality(CriterionResult& out) {
  bool flagged_everywhere = true;
  for (int k2 = 2; k2 <= 30; ++k2) {
    for (int k1 = 0; k1 <= 30; ++k1) {
      const FamilyParams f(k1, k2);
      const LedgerReport r = hypertangent_ledger(f);
      const Context ctx = family_context(f);
      out.certificates.push_back(certify("ledger-ratio", r.post_hypertangent_ratio,
                                         Relation::Equal, Rational(8, 9), ctx));
      out.certificates.push_back(certify("ledger-final-coefficient", r.final_coefficient,
                                         Relation::Equal, Rational(BigInt(8), f.d()), ctx));
      out.certificates.push_back(certify_flag("ledger-contradiction", r.contradiction, ctx));
      flagged_everywhere = flagged_everywhere && r.exponent_discrepancy;
    }
  }
  out.certificates.push_back(
      certify_flag("ledger-exponent-discrepancy-flagged", flagged_everywhere, {}));
  out.notes.push_back(hypertangent_ledger(FamilyParams(5, 3)).exponent_note);
}

}  // namespace detail

inline VerifyBundle verify_all(const PublishedTables& published, const VerifyOptions& options = {}) {
  const double s = options.grid_scale;
  VerifyBundle bundle;
  bundle.options = options;
  auto& c = bundle.criteria;
  c.push_back(detail::timed(1, "local-table", "local table exact match", 1.0,
                            [&](auto& r) { detail::local_table_match(published, r); }));
  c.push_back(detail::timed(2, "closed-forms", "closed forms for b = 1, 2", 1.0,
                            [&](auto& r) { detail::closed_forms(detail::scaled(200, s), r); }));
  c.push_back(detail::timed(3, "words", "word trees agree with the recursion", 20.0,
                            [&](auto& r) { detail::words_vs_recursion(detail::scaled(60, s), r); }));
  c.push_back(detail::timed(4, "lattice-volume", "lattice count below volume", 5.0,
                            [&](auto& r) { detail::lattice_volume(detail::scaled(120, s), r); }));
  c.push_back(detail::timed(5, "analytic", "analytic majorant chain", 10.0, [&](auto& r) {
    detail::analytic_chain(detail::scaled(120, s), detail::scaled(500, s), r);
  }));
  c.push_back(detail::timed(6, "global-table", "global table exact match", 30.0,
                            [&](auto& r) { detail::global_table_match(published, r); }));
  c.push_back(detail::timed(7, "power-bounds", "power majorant and small families", 1.0,
                            [&](auto& r) { detail::power_bounds(r); }));
  c.push_back(detail::timed(8, "families", "family verdict reconstruction", 5.0,
                            [&](auto& r) { detail::family_reconstruction(r); }));
  c.push_back(detail::timed(9, "ledger", "hypertangent ledger universality", 1.0,
                            [&](auto& r) { detail::ledger_universality(r); }));
  return bundle;
}

}  // namespace multbound
