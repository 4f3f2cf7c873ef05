#pragma once

// Builders for every CLI output document.

#include "multbound/analytic.hpp"
#include "multbound/document.hpp"
#include "multbound/global_bounds.hpp"
#include "multbound/local_bounds.hpp"
#include "multbound/polytope.hpp"
#include "multbound/rigidity.hpp"
#include "multbound/verify.hpp"
#include "multbound/words.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace multbound::reports {

using nlohmann::json;

inline std::string str(int v) { return std::to_string(v); }

inline json profile_json(const Profile& p) {
  json b = json::array();
  for (const int x : p.b) b.push_back(str(x));
  return json{{"r", str(p.r())}, {"b", b}};
}

inline std::string profile_csv(const Profile& p) {
  std::string out;
  for (const int x : p.b) {
    if (!out.empty()) out += ' ';
    out += str(x);
  }
  return out;
}

inline OutputDocument mubar_document(int a, int b) {
  OutputDocument doc;
  doc.kind = "mubar";
  doc.parameters = {{"a", str(a)}, {"b", str(b)}};
  const bool ok = is_admissible({a, b});
  const std::string value = ok ? mubar({a, b}).str() : "*";
  doc.payload = {{"admissible", ok}, {"value", value}};
  doc.csv = {{"a", "b", "value"}, {{str(a), str(b), value}}};
  doc.markdown = value + "\n";
  return doc;
}

inline OutputDocument local_table_document(int a_max, int b_max) {
  const LocalTable table = local_table(a_max, b_max);
  OutputDocument doc;
  doc.kind = "local-table";
  doc.parameters = {{"a_max", str(a_max)}, {"b_max", str(b_max)}};
  json cells = json::array();
  json maxima = json::array();
  doc.csv.header = {"a", "b", "value", "column_max"};
  for (const auto& [pair, value] : table.cells) {
    const bool is_max = value && table.column_max.at(pair.a) == pair.b;
    const std::string text = value ? value->str() : "*";
    cells.push_back({{"a", str(pair.a)}, {"b", str(pair.b)}, {"value", text}});
    doc.csv.rows.push_back({str(pair.a), str(pair.b), text, is_max ? "true" : "false"});
  }
  for (const auto& [a, b] : table.column_max) {
    maxima.push_back({{"a", str(a)}, {"b", str(b)}, {"value", table.at(a, b)->str()}});
  }
  doc.payload = {{"cells", cells},
                 {"column_max", maxima},
                 {"defined_count", std::to_string(table.defined_count())}};

  std::ostringstream md;
  md << "| a |";
  for (int a = 1; a <= a_max; ++a) md << ' ' << a << " |";
  md << "\n|---|";
  for (int a = 1; a <= a_max; ++a) md << "---|";
  md << '\n';
  for (int b = 0; b <= b_max; ++b) {
    md << "| b=" << b << " |";
    for (int a = 1; a <= a_max; ++a) {
      const auto& v = table.at(a, b);
      if (!v) {
        md << " * |";
      } else if (table.column_max.at(a) == b) {
        md << " **" << *v << "** |";
      } else {
        md << ' ' << *v << " |";
      }
    }
    md << '\n';
  }
  doc.markdown = md.str();
  return doc;
}

inline json global_row_json(const GlobalRow& row, bool show_profiles) {
  json j{{"a", str(row.a)}, {"value", row.value.str()}};
  if (show_profiles) {
    json m = json::array();
    for (const auto& p : row.maximizers) m.push_back(profile_json(p));
    j["maximizers"] = m;
  }
  if (row.discrepancy) j["discrepancy"] = *row.discrepancy;
  return j;
}

inline OutputDocument global_table_document(int a_max, bool show_profiles,
                                            const std::map<int, BigInt>& published,
                                            const GlobalOptions& options = {}) {
  const auto rows = global_table(a_max, published, options);
  OutputDocument doc;
  doc.kind = "global-table";
  doc.parameters = {{"a_max", str(a_max)}, {"show_profiles", show_profiles}};
  if (options.max_points) doc.parameters["max_points"] = str(*options.max_points);
  json out = json::array();
  doc.csv.header = {"a", "value", "maximizers", "discrepancy"};
  std::ostringstream md;
  md << "| a | " << (show_profiles ? "maximizers | " : "") << "mubar_total | note |\n|---|"
     << (show_profiles ? "---|" : "") << "---|---|\n";
  for (const auto& row : rows) {
    out.push_back(global_row_json(row, show_profiles));
    std::string profiles;
    for (const auto& p : row.maximizers) {
      if (!profiles.empty()) profiles += "; ";
      profiles += to_string(p);
    }
    std::string csv_profiles;
    for (const auto& p : row.maximizers) {
      if (!csv_profiles.empty()) csv_profiles += ';';
      csv_profiles += profile_csv(p);
    }
    doc.csv.rows.push_back({str(row.a), row.value.str(), show_profiles ? csv_profiles : "",
                            row.discrepancy.value_or("")});
    md << "| " << row.a << " | " << (show_profiles ? profiles + " | " : "") << row.value << " | "
       << row.discrepancy.value_or("") << " |\n";
  }
  doc.payload = {{"rows", out}};
  doc.markdown = md.str();
  return doc;
}

inline OutputDocument mubar_total_document(int a, const std::map<int, BigInt>& published,
                                           const GlobalOptions& options = {}) {
  GlobalRow row = mubar_total(a, options);
  if (const auto it = published.find(a); it != published.end() && it->second != row.value) {
    row.discrepancy = "computed " + row.value.str() + ", published " + it->second.str();
  }
  OutputDocument doc;
  doc.kind = "mubar-total";
  doc.parameters = {{"a", str(a)}};
  if (options.max_points) doc.parameters["max_points"] = str(*options.max_points);
  doc.payload = global_row_json(row, true);
  doc.csv.header = {"a", "value", "r", "b"};
  std::ostringstream md;
  md << "mubar_total(" << a << ") = " << row.value << '\n';
  for (const auto& p : row.maximizers) {
    doc.csv.rows.push_back({str(a), row.value.str(), str(p.r()), profile_csv(p)});
    md << "- " << to_string(p) << " (Phi + r = " << phi(p.b) + p.r() << ")\n";
  }
  if (row.discrepancy) md << "note: " << *row.discrepancy << '\n';
  doc.markdown = md.str();
  return doc;
}

inline OutputDocument words_document(int a, int b) {
  const WordState root{a, b};
  const auto words = worst_case_words(root);
  OutputDocument doc;
  doc.kind = "words";
  doc.parameters = {{"a", str(a)}, {"b", str(b)}};
  json list = json::array();
  doc.csv.header = {"word", "nu_image", "m", "positions"};
  std::ostringstream md;
  md << words.size() << " worst-case words from (" << a << "," << b << "), mubar = " << mubar(root)
     << ", prefix-free: " << (check_prefix_free(words) ? "yes" : "no") << "\n\n";
  for (const Word& w : words) {
    std::string m;
    std::string positions;
    if (b > 0) {
      const auto enc = encode_positions(w, root);
      for (std::size_t i = 0; i < enc.m.size(); ++i) {
        if (i != 0) {
          m += ' ';
          positions += ' ';
        }
        m += std::to_string(enc.m[i]);
        positions += letter_name(enc.letters[i]);
      }
    }
    const std::string image = to_string(nu_project(w));
    list.push_back({{"word", to_string(w)}, {"nu_image", image}, {"m", m}, {"positions", positions}});
    doc.csv.rows.push_back({to_string(w), image, m, positions});
    md << "- " << to_string(w) << "  nu=" << (image.empty() ? "()" : image);
    if (b > 0) md << "  m=(" << m << ")";
    md << '\n';
  }
  doc.payload = {{"count", std::to_string(words.size())},
                 {"mubar", mubar(root).str()},
                 {"prefix_free", check_prefix_free(words)},
                 {"words", list}};
  doc.markdown = md.str();
  return doc;
}

inline OutputDocument certificates_document(std::string kind, json parameters,
                                            const std::vector<BoundCertificate>& certs,
                                            json extra = json::object()) {
  OutputDocument doc;
  doc.kind = std::move(kind);
  doc.parameters = std::move(parameters);
  json list = json::array();
  doc.csv.header = certificate_csv_header();
  for (const auto& c : certs) {
    list.push_back(to_json(c));
    doc.csv.rows.push_back(csv_row(c));
    doc.markdown += markdown_line(c);
  }
  doc.payload = std::move(extra);
  doc.payload["certificates"] = list;
  return doc;
}

inline OutputDocument lattice_document(int a, int b) {
  const BigInt count = lattice_count(a, b);
  const Rational volume = volume_plus(a, b);
  auto doc = certificates_document(
      "lattice", {{"a", str(a)}, {"b", str(b)}}, {verify_lattice_volume_bound(a, b)},
      {{"lattice_count", count.str()}, {"volume_plus", to_string(volume)}});
  doc.markdown = "lattice points of Delta: " + count.str() + "\nvol(Delta+): " +
                 to_string(volume) + "\n" + doc.markdown;
  return doc;
}

inline OutputDocument analytic_document(int a, std::optional<int> only_b) {
  OutputDocument doc;
  doc.kind = "analytic";
  doc.parameters = {{"a", str(a)}};
  if (only_b) doc.parameters["b"] = str(*only_b);
  const int s = floor_sqrt(a);
  const int lo = only_b.value_or(1);
  const int hi = only_b.value_or(s);
  json rows = json::array();
  doc.csv.header = {"a", "b", "u", "v", "w", "stirling", "sqrt_degree", "sqrt_degree_refined"};
  std::ostringstream md;
  md << "| b | u_b | v_b | w_b | stirling |\n|---|---|---|---|---|\n";
  std::vector<BoundCertificate> certs;
  for (int b = lo; b <= hi; ++b) {
    const AnalyticReport r = analytic_report(a, b);
    const std::string v = r.v ? format_double(*r.v) : "";
    const std::string refined =
        r.sqrt_degree_refined ? format_double(*r.sqrt_degree_refined) : "";
    rows.push_back({{"b", str(b)},
                    {"u", format_double(r.u)},
                    {"v", v},
                    {"w", format_double(r.w)},
                    {"stirling", to_string(r.stirling)}});
    doc.csv.rows.push_back({str(a), str(b), format_double(r.u), v, format_double(r.w),
                            to_string(r.stirling), format_double(r.sqrt_degree), refined});
    md << "| " << b << " | " << format_double(r.u) << " | " << (v.empty() ? "-" : v) << " | "
       << format_double(r.w) << " | " << to_string(r.stirling) << " |\n";
    certs.push_back(verify_u_dominates_stirling(a, b));
  }
  json cert_list = json::array();
  for (const auto& c : certs) cert_list.push_back(to_json(c));
  doc.payload = {{"rows", rows},
                 {"sqrt_degree_bound", format_double(sqrt_degree_bound(a))},
                 {"certificates", cert_list}};
  md << "\nsqrt-degree bound: " << format_double(sqrt_degree_bound(a)) << '\n';
  if (a >= 17) {
    doc.payload["sqrt_degree_bound_refined"] = format_double(sqrt_degree_bound_refined(a));
    md << "refined sqrt-degree bound: " << format_double(sqrt_degree_bound_refined(a)) << '\n';
    doc.payload["u_argmax_bound"] = to_json(u_argmax_bound(a));
  }
  for (const auto& c : certs) md << markdown_line(c);
  doc.markdown = md.str();
  return doc;
}

inline OutputDocument family_document(int k1, int k2, int a_max_direct) {
  const FamilyParams f(k1, k2);
  const Verdict v = check_family(f, a_max_direct);
  OutputDocument doc;
  doc.kind = "check-family";
  doc.parameters = {{"k1", str(k1)}, {"k2", str(k2)}, {"a_max_direct", str(a_max_direct)}};
  json evidence = json::array();
  for (const auto& c : v.evidence) evidence.push_back(to_json(c));
  doc.payload = {{"status", status_name(v.status)},
                 {"M", str(f.M())},
                 {"d", f.d().str()},
                 {"bound", v.bound.str()},
                 {"threshold", to_string(v.threshold)},
                 {"margin", to_string(v.margin)},
                 {"evidence", evidence},
                 {"notes", v.notes}};
  std::ostringstream md;
  md << "family 2^" << k1 << " 3^" << k2 << " (M=" << f.M() << ", d=" << f.d() << ")\n"
     << "verdict: " << status_name(v.status) << "\nmargin: " << to_string(v.margin) << '\n';
  for (const auto& c : v.evidence) md << markdown_line(c);
  for (const auto& n : v.notes) md << "note: " << n << '\n';
  doc.csv.header = certificate_csv_header();
  for (const auto& c : v.evidence) doc.csv.rows.push_back(csv_row(c));

  if (k2 >= 2) {
    const LedgerReport r = hypertangent_ledger(f);
    json certs = json::array();
    for (const auto& c : r.certificates) {
      certs.push_back(to_json(c));
      doc.csv.rows.push_back(csv_row(c));
    }
    doc.payload["ledger"] = {{"hypertangent_multiplier", r.hypertangent_multiplier.str()},
                             {"degree_multiplier", r.degree_multiplier.str()},
                             {"post_hypertangent_ratio", to_string(r.post_hypertangent_ratio)},
                             {"line_bound_coefficient", to_string(r.line_bound_coefficient)},
                             {"final_coefficient", to_string(r.final_coefficient)},
                             {"contradiction", r.contradiction},
                             {"exponent_discrepancy", r.exponent_discrepancy},
                             {"exponent_note", r.exponent_note},
                             {"certificates", certs}};
    md << "\nledger: ratio " << to_string(r.post_hypertangent_ratio) << ", final coefficient "
       << to_string(r.final_coefficient) << ", contradiction "
       << (r.contradiction ? "yes" : "no") << '\n';
    for (const auto& c : r.certificates) md << markdown_line(c);
    if (r.exponent_discrepancy) md << "flag: " << r.exponent_note << '\n';
  }
  doc.markdown = md.str();
  return doc;
}

inline OutputDocument verify_document(const VerifyBundle& bundle, const std::string& golden) {
  OutputDocument doc;
  doc.kind = "verify";
  doc.parameters = {{"grid_scale", format_double(bundle.options.grid_scale)},
                    {"published_tables", golden}};
  json criteria = json::array();
  doc.csv.header = {"criterion", "claim_id", "lhs", "relation", "rhs", "holds", "context"};
  std::ostringstream md;
  for (const auto& c : bundle.criteria) {
    json certs = json::array();
    for (const auto& cert : c.certificates) {
      certs.push_back(to_json(cert));
      auto row = csv_row(cert);
      row.insert(row.begin(), str(c.number));
      doc.csv.rows.push_back(std::move(row));
    }
    criteria.push_back({{"number", str(c.number)},
                        {"id", c.id},
                        {"title", c.title},
                        {"passed", c.passed()},
                        {"certificate_count", std::to_string(c.certificates.size())},
                        {"failed_count", std::to_string(c.failed_count())},
                        {"notes", c.notes},
                        {"certificates", certs}});
    md << (c.passed() ? "PASS" : "FAIL") << "  " << c.number << ". " << c.title << " ("
       << c.certificates.size() - c.failed_count() << "/" << c.certificates.size() << ")\n";
    for (const auto& n : c.notes) md << "      note: " << n << '\n';
    for (const auto& cert : c.certificates) {
      if (!cert.holds) md << "      " << markdown_line(cert);
    }
  }
  doc.payload = {{"all_hold", bundle.all_hold()}, {"criteria", criteria}};
  md << (bundle.all_hold() ? "all certificates hold\n" : "some certificates FAILED\n");
  doc.markdown = md.str();
  return doc;
}

}  // namespace multbound::reports
