#ifndef QPARITY_TSV_HPP
#define QPARITY_TSV_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qparity {

/// Delimited table with a header row. '#' lines are kept as comments;
/// blank cells and "--" mark missing values.
struct TsvTable {
  std::string source;
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<int> row_lines;

  int column_index(std::string_view name) const;
  int require_column(std::string_view name) const;  // throws with diagnostics
  const std::string& cell(std::size_t row, std::size_t col) const;
  bool missing(std::size_t row, std::size_t col) const;
  double number(std::size_t row, std::size_t col) const;
  std::optional<double> opt_number(std::size_t row, std::size_t col) const;
};

TsvTable parse_tsv(std::string_view content, const std::string& source_name);
TsvTable read_tsv(const std::filesystem::path& path);

/// Shortest decimal representation that round-trips the double exactly.
std::string format_double(double v);

double parse_double(std::string_view text, const std::string& where);

void write_tsv(const std::filesystem::path& path,
               const std::vector<std::string>& header_comments,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows);

} // namespace qparity

#endif
