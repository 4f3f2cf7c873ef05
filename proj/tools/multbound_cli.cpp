// multbound: tables, queries, scans and the certificate run.
//
// Exit codes: 0 success (verify: every certificate holds), 1 some
// certificate failed, 2 usage or domain error.

#include "multbound/reports.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#ifndef MULTBOUND_PUBLISHED_TABLES
#define MULTBOUND_PUBLISHED_TABLES "data/published_tables.txt"
#endif

namespace {

using namespace multbound;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string format = "markdown";
  std::string out;
  std::string golden = MULTBOUND_PUBLISHED_TABLES;
};

void add_common(CLI::App* cmd, Common& common, bool with_golden = false) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"markdown", "json", "csv"}));
  cmd->add_option("--out", common.out, "Write output to FILE instead of stdout");
  if (with_golden) cmd->add_option("--golden", common.golden, "Published tables data file");
}

int emit(const OutputDocument& doc, const Common& common) {
  const std::string text = doc.render(parse_format(common.format));
  if (common.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(common.out, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot write " << common.out << '\n';
    return kExitUsage;
  }
  file << text;
  return 0;
}

std::map<int, BigInt> published_values_or_empty(const std::string& path) {
  try {
    return load_published(path).global_values();
  } catch (const std::exception& e) {
    std::cerr << "warning: " << e.what() << "; discrepancy notes disabled\n";
    return {};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator and verifier for multiplicity bounds"};
  app.require_subcommand(1);
  Common common;

  int a = 0;
  int b = 0;
  int a_max = 36;
  int b_max = 7;
  bool show_profiles = false;
  int a_max_direct = kDefaultDirectRange;
  double grid_scale = 1.0;
  std::optional<int> max_points;
  std::optional<int> only_b;
  int k1 = 0;
  int k2 = 0;

  auto* mubar_cmd = app.add_subcommand("mubar", "Local bound mubar(a,b); '*' outside a >= b^2");
  mubar_cmd->add_option("a", a)->required();
  mubar_cmd->add_option("b", b)->required()->check(CLI::NonNegativeNumber);
  add_common(mubar_cmd, common);

  auto* local_cmd = app.add_subcommand("local-table", "Table of mubar(a,b) with column maxima");
  local_cmd->add_option("--a-max", a_max)->check(CLI::PositiveNumber);
  local_cmd->add_option("--b-max", b_max)->check(CLI::NonNegativeNumber);
  add_common(local_cmd, common);

  auto* global_cmd = app.add_subcommand("global-table", "Rows of mubar_total(a) for 1..a-max");
  global_cmd->add_option("--a-max", a_max)->check(CLI::PositiveNumber);
  global_cmd->add_flag("--show-profiles", show_profiles, "List the maximizing profiles");
  global_cmd->add_option("--max-points", max_points, "Cap on the number of points r (N+1)")
      ->check(CLI::PositiveNumber);
  add_common(global_cmd, common, true);

  auto* total_cmd = app.add_subcommand("mubar-total", "mubar_total(a) with all maximizers");
  total_cmd->add_option("a", a)->required()->check(CLI::PositiveNumber);
  total_cmd->add_option("--max-points", max_points, "Cap on the number of points r (N+1)")
      ->check(CLI::PositiveNumber);
  add_common(total_cmd, common, true);

  auto* words_cmd = app.add_subcommand("words", "Worst-case word tree rooted at (a,b)");
  words_cmd->add_option("a", a)->required()->check(CLI::NonNegativeNumber);
  words_cmd->add_option("b", b)->required()->check(CLI::NonNegativeNumber);
  add_common(words_cmd, common);

  auto* lattice_cmd = app.add_subcommand("lattice", "Lattice count of Delta and vol(Delta+)");
  lattice_cmd->add_option("a", a)->required()->check(CLI::NonNegativeNumber);
  lattice_cmd->add_option("b", b)->required()->check(CLI::PositiveNumber);
  add_common(lattice_cmd, common);

  auto* analytic_cmd = app.add_subcommand("analytic", "Analytic majorants u, v, w at a");
  analytic_cmd->add_option("a", a)->required()->check(CLI::PositiveNumber);
  analytic_cmd->add_option("b", only_b)->check(CLI::PositiveNumber);
  add_common(analytic_cmd, common);

  auto* family_cmd = app.add_subcommand("check-family", "Verdict for the family 2^k1 3^k2");
  family_cmd->add_option("k1", k1)->required()->check(CLI::NonNegativeNumber);
  family_cmd->add_option("k2", k2)->required()->check(CLI::NonNegativeNumber);
  family_cmd->add_option("--a-max-direct", a_max_direct)->check(CLI::Range(12, 1000));
  add_common(family_cmd, common);

  auto* verify_cmd = app.add_subcommand("verify", "Run every certificate");
  verify_cmd->alias("verify-paper");
  verify_cmd->add_option("--grid-scale", grid_scale, "Scale factor for property grids")
      ->check(CLI::Range(0.01, 100.0));
  add_common(verify_cmd, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*mubar_cmd) return emit(reports::mubar_document(a, b), common);
    if (*local_cmd) return emit(reports::local_table_document(a_max, b_max), common);
    if (*global_cmd) {
      return emit(reports::global_table_document(a_max, show_profiles,
                                                 published_values_or_empty(common.golden),
                                                 GlobalOptions{max_points}),
                  common);
    }
    if (*total_cmd) {
      return emit(reports::mubar_total_document(a, published_values_or_empty(common.golden),
                                                GlobalOptions{max_points}),
                  common);
    }
    if (*words_cmd) return emit(reports::words_document(a, b), common);
    if (*lattice_cmd) return emit(reports::lattice_document(a, b), common);
    if (*analytic_cmd) return emit(reports::analytic_document(a, only_b), common);
    if (*family_cmd) return emit(reports::family_document(k1, k2, a_max_direct), common);
    if (*verify_cmd) {
      const PublishedTables published = load_published(common.golden);
      const VerifyBundle bundle = verify_all(published, VerifyOptions{grid_scale});
      const int rc = emit(reports::verify_document(bundle, common.golden), common);
      if (rc != 0) return rc;
      return bundle.all_hold() ? 0 : kExitFail;
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PublishedFormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
