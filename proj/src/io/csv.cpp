#include "bgeom/io/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "bgeom/errors.hpp"

namespace bgeom::io {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n\r") == std::string::npos && (cell.empty() || cell[0] != '#')) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cells.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cells.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.emplace_back();
    } else {
      cells.back() += c;
    }
  }
  if (quoted) throw ParseError("unterminated quote in CSV row");
  return cells;
}

}  // namespace

CsvTable::CsvTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
  if (cells.size() != columns_.size())
    throw std::invalid_argument("CSV row has " + std::to_string(cells.size()) + " cells, expected " +
                                std::to_string(columns_.size()));
  rows_.push_back(std::move(cells));
}

std::string CsvTable::str() const {
  std::ostringstream out;
  for (const auto& c : comments_) out << "# " << c << '\n';
  auto row = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << escape(cells[i]);
    out << '\n';
  };
  row(columns_);
  for (const auto& r : rows_) row(r);
  return out.str();
}

CsvTable parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<CsvTable> table;
  std::vector<std::string> comments;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    // A quoted cell may span lines: keep reading until the quotes balance.
    for (std::string more; line[0] != '#' && std::count(line.begin(), line.end(), '"') % 2 == 1 && std::getline(in, more);) {
      if (!more.empty() && more.back() == '\r') more.pop_back();
      line += '\n' + more;
    }
    if (line[0] == '#') {
      comments.push_back(line.substr(line.size() > 1 && line[1] == ' ' ? 2 : 1));
      continue;
    }
    if (!table) {
      table.emplace(split_row(line));
      for (const auto& c : comments) table->comment(c);
      continue;
    }
    auto cells = split_row(line);
    if (cells.size() != table->columns().size()) throw ParseError("CSV row width does not match the header");
    table->add_row(std::move(cells));
  }
  if (!table) throw ParseError("CSV text has no header row");
  return *table;
}

}  // namespace bgeom::io
