#include "qparity/tsv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qparity/errors.hpp"

namespace qparity {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view line, char delim) {
  std::vector<std::string> out;
  if (delim == ' ') {
    // whitespace runs
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) out.push_back(trim(line.substr(i, j - i)));
      i = j;
    }
    return out;
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == delim) {
      out.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

char detect_delim(std::string_view header) {
  if (header.find('\t') != std::string_view::npos) return '\t';
  if (header.find(',') != std::string_view::npos) return ',';
  return ' ';
}

bool is_missing(const std::string& cell) {
  return cell.empty() || cell == "--" || cell == "-" || cell == "NA";
}

} // namespace

int TsvTable::column_index(std::string_view name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return static_cast<int>(i);
  return -1;
}

int TsvTable::require_column(std::string_view name) const {
  const int i = column_index(name);
  if (i < 0)
    throw validation_error(source + ": missing required column '" +
                           std::string(name) + "'");
  return i;
}

const std::string& TsvTable::cell(std::size_t row, std::size_t col) const {
  return rows.at(row).at(col);
}

bool TsvTable::missing(std::size_t row, std::size_t col) const {
  return is_missing(cell(row, col));
}

double TsvTable::number(std::size_t row, std::size_t col) const {
  const std::string& c = cell(row, col);
  std::ostringstream where;
  where << source << ":" << row_lines.at(row) << ": column '"
        << columns.at(col) << "'";
  if (is_missing(c)) throw validation_error(where.str() + ": missing value");
  return parse_double(c, where.str());
}

std::optional<double> TsvTable::opt_number(std::size_t row, std::size_t col) const {
  if (missing(row, col)) return std::nullopt;
  return number(row, col);
}

TsvTable parse_tsv(std::string_view content, const std::string& source_name) {
  TsvTable t;
  t.source = source_name;
  char delim = '\0';
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    const std::size_t nl = content.find('\n', pos);
    std::string_view line = content.substr(
        pos, nl == std::string_view::npos ? content.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? content.size() + 1 : nl + 1;
    ++line_no;
    const std::string trimmed = trim(line);
    if (trimmed.empty()) continue;
    if (trimmed[0] == '#') {
      t.comments.push_back(trimmed);
      continue;
    }
    if (t.columns.empty()) {
      delim = detect_delim(line);
      t.columns = split(line, delim);
      continue;
    }
    auto cells = split(line, delim);
    if (cells.size() != t.columns.size()) {
      std::ostringstream msg;
      msg << source_name << ":" << line_no << ": expected " << t.columns.size()
          << " columns, got " << cells.size();
      throw validation_error(msg.str());
    }
    t.rows.push_back(std::move(cells));
    t.row_lines.push_back(line_no);
  }
  if (t.columns.empty())
    throw validation_error(source_name + ": no header row");
  return t;
}

TsvTable read_tsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_tsv(buf.str(), path.string());
}

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, const std::string& where) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last)
    throw validation_error(where + ": cannot parse number '" +
                           std::string(text) + "'");
  return v;
}

void write_tsv(const std::filesystem::path& path,
               const std::vector<std::string>& header_comments,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<std::string>>& rows) {
  std::ofstream out(path);
  if (!out) throw validation_error("cannot write " + path.string());
  for (const auto& c : header_comments) out << "# " << c << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i)
    out << columns[i] << (i + 1 < columns.size() ? '\t' : '\n');
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      out << row[i] << (i + 1 < row.size() ? '\t' : '\n');
  }
  if (!out) throw validation_error("write failed: " + path.string());
}

} // namespace qparity
