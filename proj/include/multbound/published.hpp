#pragma once

// Loader for the published-tables data file (data/published_tables.txt).
//
//   version 1
//   local  a=<a> b=<b> value=<int|*> max=<0|1> src=<tag>
//   global a=<a> value=<int> r=<r> b=<b1,...,br> [excluded=1] src=<tag>
//
// Blank lines and lines starting with '#' are ignored.

#include "multbound/core.hpp"
#include "multbound/global_bounds.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace multbound {

struct PublishedLocalCell {
  int a = 0;
  int b = 0;
  std::optional<BigInt> value;  // nullopt for "*"
  bool column_max = false;
  std::string source;
};

struct PublishedGlobalRow {
  int a = 0;
  BigInt value;
  Profile maximizer;
  bool excluded = false;
  std::string source;
};

struct PublishedTables {
  int version = 0;
  std::vector<PublishedLocalCell> local;
  std::vector<PublishedGlobalRow> global;

  std::map<int, BigInt> global_values() const {
    std::map<int, BigInt> out;
    for (const auto& row : global) out.emplace(row.a, row.value);
    return out;
  }
};

class PublishedFormatError : public std::runtime_error {
 public:
  PublishedFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("published tables, line " + std::to_string(line) + ": " + what) {}
};

namespace detail {

inline std::map<std::string, std::string> parse_fields(std::istringstream& in, std::size_t line) {
  std::map<std::string, std::string> fields;
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw PublishedFormatError(line, "expected key=value, got " + token);
    fields[token.substr(0, eq)] = token.substr(eq + 1);
  }
  return fields;
}

inline const std::string& need(const std::map<std::string, std::string>& fields,
                               const std::string& key, std::size_t line) {
  const auto it = fields.find(key);
  if (it == fields.end()) throw PublishedFormatError(line, "missing field '" + key + "'");
  return it->second;
}

inline int to_int(const std::string& text, std::size_t line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw PublishedFormatError(line, "not an integer: '" + text + "'");
  }
}

inline BigInt to_big(const std::string& text, std::size_t line) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw PublishedFormatError(line, "not a non-negative integer: '" + text + "'");
  }
  return BigInt(text);
}

}  // namespace detail

inline PublishedTables parse_published(std::istream& in) {
  PublishedTables tables;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    if (text.empty() || text[0] == '#') continue;
    std::istringstream row(text);
    std::string kind;
    row >> kind;
    if (kind == "version") {
      std::string v;
      row >> v;
      tables.version = detail::to_int(v, line);
      continue;
    }
    const auto fields = detail::parse_fields(row, line);
    const auto src = fields.count("src") ? fields.at("src") : std::string{};
    if (kind == "local") {
      PublishedLocalCell cell;
      cell.a = detail::to_int(detail::need(fields, "a", line), line);
      cell.b = detail::to_int(detail::need(fields, "b", line), line);
      const auto& value = detail::need(fields, "value", line);
      if (value != "*") cell.value = detail::to_big(value, line);
      cell.column_max = fields.count("max") && fields.at("max") == "1";
      cell.source = src;
      tables.local.push_back(std::move(cell));
    } else if (kind == "global") {
      PublishedGlobalRow g;
      g.a = detail::to_int(detail::need(fields, "a", line), line);
      g.value = detail::to_big(detail::need(fields, "value", line), line);
      const int r = detail::to_int(detail::need(fields, "r", line), line);
      std::istringstream list(detail::need(fields, "b", line));
      std::string item;
      while (std::getline(list, item, ',')) g.maximizer.b.push_back(detail::to_int(item, line));
      if (g.maximizer.r() != r) throw PublishedFormatError(line, "r does not match tuple length");
      g.excluded = fields.count("excluded") && fields.at("excluded") == "1";
      g.source = src;
      tables.global.push_back(std::move(g));
    } else {
      throw PublishedFormatError(line, "unknown record kind '" + kind + "'");
    }
  }
  if (tables.version != 1) throw PublishedFormatError(line, "unsupported or missing version");
  return tables;
}

inline PublishedTables load_published(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open published tables: " + path);
  return parse_published(in);
}

}  // namespace multbound
