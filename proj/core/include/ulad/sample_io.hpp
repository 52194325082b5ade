#ifndef ULAD_SAMPLE_IO_HPP
#define ULAD_SAMPLE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ulad {

/// Read a plain-text sample file: one real per line, blank lines and lines
/// starting with '#' ignored. Throws parse_error (with line number) on
/// malformed content, or with line 0 when the file cannot be opened.
std::vector<double> read_samples(std::istream& in);
std::vector<double> read_samples_file(const std::string& path);

}  // namespace ulad

#endif
