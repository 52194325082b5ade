#include "ulad/series.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ulad {

std::string format_g17(double value) {
  char buf[40];
  const int len = std::snprintf(buf, sizeof(buf), "%.17g", value);
  return std::string(buf, static_cast<std::size_t>(len));
}

namespace {

void check_rectangular(const Series& series) {
  for (const auto& row : series.rows)
    if (row.size() != series.columns.size())
      throw std::invalid_argument("Series: row width does not match columns");
}

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

void write_csv(std::ostream& out, const Series& series, std::string_view config_json) {
  check_rectangular(series);
  out << "# config = " << config_json << "\n";
  for (std::size_t i = 0; i < series.columns.size(); ++i) {
    if (i) out << ',';
    out << series.columns[i];
  }
  out << '\n';
  for (const auto& row : series.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_g17(row[i]);
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const Series& series, std::string_view config_json) {
  check_rectangular(series);
  out << "{\n  \"config\": " << config_json << ",\n  \"columns\": [";
  for (std::size_t i = 0; i < series.columns.size(); ++i) {
    if (i) out << ", ";
    out << '"' << json_escape(series.columns[i]) << '"';
  }
  out << "],\n  \"rows\": [\n";
  for (std::size_t r = 0; r < series.rows.size(); ++r) {
    out << "    [";
    for (std::size_t i = 0; i < series.rows[r].size(); ++i) {
      if (i) out << ", ";
      out << format_g17(series.rows[r][i]);
    }
    out << (r + 1 < series.rows.size() ? "],\n" : "]\n");
  }
  out << "  ]\n}\n";
}

}  // namespace ulad
