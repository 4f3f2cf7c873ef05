#pragma once

// Output documents in three formats. JSON carries {schema_version, kind,
// parameters, payload}; big numbers are always decimal strings. CSV is a flat
// header + rows table; markdown is free-form text built by the caller.

#include "multbound/core.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace multbound {

enum class Format { Markdown, Json, Csv };

inline Format parse_format(const std::string& text) {
  if (text == "markdown") return Format::Markdown;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw DomainError("unknown format '" + text + "'");
}

inline constexpr const char* kSchemaVersion = "1";

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const CsvTable&, const CsvTable&) = default;
};

namespace csv {

inline std::string quote(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string render(const CsvTable& table) {
  std::string out;
  auto line = [&out](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i != 0) out += ',';
      out += quote(fields[i]);
    }
    out += '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) line(row);
  return out;
}

/// RFC 4180 subset: LF line ends, double-quote escaping. First record is the header.
inline CsvTable parse(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    any = true;
    if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      record.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      record.push_back(std::move(field));
      field.clear();
      records.push_back(std::move(record));
      record.clear();
      any = false;
    } else {
      field += c;
    }
  }
  if (quoted) throw DomainError("csv: unterminated quoted field");
  if (any) {
    record.push_back(std::move(field));
    records.push_back(std::move(record));
  }
  CsvTable table;
  if (records.empty()) return table;
  table.header = std::move(records.front());
  table.rows.assign(std::make_move_iterator(records.begin() + 1),
                    std::make_move_iterator(records.end()));
  return table;
}

}  // namespace csv

struct OutputDocument {
  std::string kind;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json payload = nlohmann::json::object();
  CsvTable csv;
  std::string markdown;

  nlohmann::json to_json() const {
    return nlohmann::json{{"schema_version", kSchemaVersion},
                          {"kind", kind},
                          {"parameters", parameters},
                          {"payload", payload}};
  }

  std::string render(Format format) const {
    switch (format) {
      case Format::Json: return to_json().dump(2) + "\n";
      case Format::Csv: return csv::render(csv);
      case Format::Markdown: return markdown;
    }
    return {};
  }
};

inline nlohmann::json to_json(const Context& ctx) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [key, value] : ctx) j[key] = value;
  return j;
}

inline nlohmann::json to_json(const BoundCertificate& c) {
  return nlohmann::json{{"claim_id", c.claim_id},
                        {"lhs", to_string(c.lhs)},
                        {"rhs", to_string(c.rhs)},
                        {"relation", relation_symbol(c.relation)},
                        {"holds", c.holds},
                        {"context", to_json(c.context)}};
}

inline std::string context_string(const Context& ctx) {
  std::string out;
  for (const auto& [key, value] : ctx) {
    if (!out.empty()) out += ' ';
    out += key + "=" + value;
  }
  return out;
}

inline std::vector<std::string> csv_row(const BoundCertificate& c) {
  return {c.claim_id, to_string(c.lhs), relation_symbol(c.relation), to_string(c.rhs),
          c.holds ? "true" : "false", context_string(c.context)};
}

inline std::vector<std::string> certificate_csv_header() {
  return {"claim_id", "lhs", "relation", "rhs", "holds", "context"};
}

inline std::string markdown_line(const BoundCertificate& c) {
  std::ostringstream out;
  out << "- [" << (c.holds ? "ok" : "FAIL") << "] " << c.claim_id << ": " << to_string(c.lhs)
      << ' ' << relation_symbol(c.relation) << ' ' << to_string(c.rhs);
  if (!c.context.empty()) out << "  (" << context_string(c.context) << ")";
  out << '\n';
  return out.str();
}

}  // namespace multbound
