#pragma once

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace hyperfpp::cli {

/// One output cell; monostate renders as an empty CSV field or JSON null.
using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

/// Configuration echo written ahead of the rows.
using Echo = std::vector<std::pair<std::string, Cell>>;

/// 17 significant digits, '.' separator (printf in the "C" locale).
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string format_cell(const Cell& c) {
  struct {
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_double(v); }
    std::string operator()(const std::string& v) const { return v; }
  } visitor;
  return std::visit(visitor, c);
}

/// RFC 4180 quoting: fields containing a comma, quote or line break are quoted, quotes doubled.
inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

inline void write_csv(std::ostream& os, const Echo& echo, const Table& table) {
  os << '#';
  for (std::size_t i = 0; i < echo.size(); ++i)
    os << (i ? "," : " ") << csv_escape(echo[i].first + "=" + format_cell(echo[i].second));
  os << "\r\n";
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << csv_escape(table.columns[i]);
  os << "\r\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(format_cell(row[i]));
    os << "\r\n";
  }
}

inline nlohmann::ordered_json to_json(const Cell& c) {
  struct {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
    nlohmann::ordered_json operator()(double v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  } visitor;
  return std::visit(visitor, c);
}

inline void write_json(std::ostream& os, const Echo& echo, const Table& table) {
  nlohmann::ordered_json doc;
  auto& config = doc["config"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : echo) config[key] = to_json(value);
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[table.columns[i]] = to_json(row[i]);
    rows.push_back(std::move(obj));
  }
  os << doc.dump(2) << '\n';
}

}  // namespace hyperfpp::cli
