#include "heatlab/csv.hpp"

#include <array>
#include <charconv>
#include <ostream>
#include <sstream>

#include "heatlab/errors.hpp"

namespace heatlab::csv {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

std::string format_real(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

double parse_real(std::string_view text) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw DomainError("csv: not a number: '" + std::string(text) + "'");
  }
  return value;
}

void write(std::ostream& os, const Table& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i) os << (i ? "," : "") << table.header[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      if (row[i]) os << format_real(*row[i]);
    }
    os << '\n';
  }
}

std::string to_string(const Table& table) {
  std::ostringstream os;
  write(os, table);
  return os.str();
}

Table parse(std::string_view text) {
  Table table;
  bool first = true;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(start, end - start);
    start = end + 1;
    if (first) {
      for (auto name : split(line, ',')) table.header.emplace_back(name);
      first = false;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != table.header.size()) {
      std::ostringstream os;
      os << "csv: row " << table.rows.size() + 1 << " has " << fields.size() << " fields, header has "
         << table.header.size();
      throw DomainError(os.str());
    }
    std::vector<Cell> row;
    row.reserve(fields.size());
    for (auto f : fields) row.push_back(f.empty() ? Cell{} : Cell{parse_real(f)});
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace heatlab::csv
