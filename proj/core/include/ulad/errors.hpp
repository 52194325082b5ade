#ifndef ULAD_ERRORS_HPP
#define ULAD_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ulad {

/// Input file could not be parsed. Carries the 1-based line number of the
/// offending line (0 when the failure is not tied to a line, e.g. open errors).
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, std::size_t line)
      : std::runtime_error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A computation reached a numerically infeasible state (negative discriminant,
/// nonpositive variance, stationary point that is not a minimum).
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ulad

#endif
