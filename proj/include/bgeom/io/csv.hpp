#pragma once

#include <string>
#include <vector>

namespace bgeom::io {

/// 17 significant digits, enough to round-trip any double.
std::string format_real(double x);

/// A table with "#" comment lines above a header row.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> columns);

  void comment(const std::string& line) { comments_.push_back(line); }
  /// Throws std::invalid_argument on a column-count mismatch.
  void add_row(std::vector<std::string> cells);

  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<std::string>>& rows() const { return rows_; }
  std::string str() const;

 private:
  std::vector<std::string> comments_;
  std::vector<std::string> columns_;
  std::vector<std::vector<std::string>> rows_;
};

/// Parses text written by CsvTable::str(): comments kept, first row is
/// the header. Quoted cells may contain commas and doubled quotes.
/// Throws ParseError.
CsvTable parse_csv(const std::string& text);

}  // namespace bgeom::io
