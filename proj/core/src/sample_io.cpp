#include "ulad/sample_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <string>
#include <string_view>

#include "ulad/errors.hpp"

namespace ulad {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<double> read_samples(std::istream& in) {
  std::vector<double> samples;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view token = trim(line);
    if (token.empty() || token.front() == '#') continue;

    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
      throw parse_error("sample file: expected one real per line, got '" +
                            std::string(token) + "'",
                        line_no);
    samples.push_back(value);
  }
  if (samples.empty())
    throw parse_error("sample file: no samples found", line_no);
  return samples;
}

std::vector<double> read_samples_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open sample file: " + path, 0);
  return read_samples(in);
}

}  // namespace ulad
