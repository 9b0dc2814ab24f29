#pragma once

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace atomforce::cli {

/// Empty, number or text.
using Cell = std::variant<std::monostate, double, std::string>;

/// Table with a fixed column list and comment lines that go in the file header.
struct Dataset {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> comments;
};

/// 12 significant digits in scientific notation, locale independent.
inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

inline void write_csv(std::ostream& os, const Dataset& d) {
  for (const auto& c : d.comments) os << "# " << c << '\n';
  for (std::size_t i = 0; i < d.columns.size(); ++i) os << (i ? "," : "") << d.columns[i];
  os << '\n';
  for (const auto& row : d.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      if (const auto* x = std::get_if<double>(&row[i])) os << format_number(*x);
      if (const auto* s = std::get_if<std::string>(&row[i])) os << csv_escape(*s);
    }
    os << '\n';
  }
}

/// JSON array of row objects preceded by // comment lines. Numbers are written
/// with the same 12-digit formatting as the CSV.
inline void write_json(std::ostream& os, const Dataset& d) {
  for (const auto& c : d.comments) os << "// " << c << '\n';
  os << "[\n";
  for (std::size_t r = 0; r < d.rows.size(); ++r) {
    os << "  {";
    const auto& row = d.rows[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      os << (i ? ", " : "") << nlohmann::json(d.columns[i]).dump() << ": ";
      if (const auto* x = std::get_if<double>(&row[i])) {
        os << (std::isfinite(*x) ? format_number(*x) : "null");
      } else if (const auto* s = std::get_if<std::string>(&row[i])) {
        os << nlohmann::json(*s).dump();
      } else {
        os << "null";
      }
    }
    os << "}" << (r + 1 < d.rows.size() ? "," : "") << '\n';
  }
  os << "]\n";
}

}  // namespace atomforce::cli
