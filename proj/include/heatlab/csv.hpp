#pragma once

// Locale-independent CSV with 17-significant-digit reals. An empty cell
// means the producing solver failed for that entry.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace heatlab::csv {

using Cell = std::optional<double>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// 17 significant digits, '.' separator, independent of the global locale.
std::string format_real(double value);

/// Parses a real written by format_real (or any from_chars-compatible form).
/// Throws DomainError on trailing garbage.
double parse_real(std::string_view text);

void write(std::ostream& os, const Table& table);
std::string to_string(const Table& table);

/// Throws DomainError on ragged rows or unparsable cells.
Table parse(std::string_view text);

}  // namespace heatlab::csv
