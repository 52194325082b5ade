#ifndef ULAD_SERIES_HPP
#define ULAD_SERIES_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ulad {

/// A rectangular numeric result table, one named column per output quantity.
struct Series {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Shortest exact decimal form at 17 significant digits; parsing the string
/// back yields the identical double.
std::string format_g17(double value);

/// CSV with the experiment config embedded as a '# config = {...}' comment,
/// a header row, and full-precision values.
void write_csv(std::ostream& out, const Series& series, std::string_view config_json);

/// {"config": ..., "columns": [...], "rows": [[...]]}. config_json is embedded
/// verbatim and must already be valid JSON.
void write_json(std::ostream& out, const Series& series, std::string_view config_json);

}  // namespace ulad

#endif
