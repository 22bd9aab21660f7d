#include "shf/matrix.hpp"

#include <algorithm>
#include <charconv>

namespace shf {

namespace {

void require_binary(const CodeMatrix& m, const char* op) {
  if (!m.is_binary()) throw std::invalid_argument(std::string(op) + ": matrix is not binary");
}

void require_row(const CodeMatrix& m, std::size_t r) {
  if (r >= m.rows()) throw std::out_of_range("row index " + std::to_string(r) + " out of range");
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

CodeMatrix::CodeMatrix(std::vector<std::vector<Symbol>> rows, unsigned q) : q_(q) {
  if (q < 2 || q > kMaxAlphabet) throw std::invalid_argument("alphabet size must be in [2, 10]");
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("matrix must have at least one row and column");
  rows_ = rows.size();
  cols_ = rows.front().size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged rows");
    for (Symbol s : row) {
      if (s >= q) throw std::invalid_argument("symbol " + std::to_string(s) + " outside alphabet");
      data_.push_back(s);
    }
  }
}

CodeMatrix CodeMatrix::from_column_values(std::span<const std::uint64_t> values, std::size_t rows) {
  if (rows == 0 || rows > 64) throw std::invalid_argument("from_column_values: rows must be in [1, 64]");
  std::vector<std::vector<Symbol>> grid(rows, std::vector<Symbol>(values.size()));
  for (std::size_t c = 0; c < values.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) grid[r][c] = static_cast<Symbol>((values[c] >> (rows - 1 - r)) & 1U);
  return CodeMatrix(std::move(grid), 2);
}

std::vector<Symbol> CodeMatrix::column(std::size_t c) const {
  std::vector<Symbol> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

std::uint64_t CodeMatrix::column_value(std::size_t c) const {
  if (!is_binary() || rows_ > 64) throw std::invalid_argument("column_value: needs a binary matrix with at most 64 rows");
  std::uint64_t v = 0;
  for (std::size_t r = 0; r < rows_; ++r) v = (v << 1) | at(r, c);
  return v;
}

std::string CodeMatrix::row_string(std::size_t r) const {
  std::string s;
  s.reserve(cols_);
  for (Symbol x : row(r)) s.push_back(static_cast<char>('0' + x));
  return s;
}

CodeMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Symbol>> rows;
  std::size_t line_no = 0;
  std::size_t first_row_line = 0;
  unsigned declared_q = 0;
  unsigned max_symbol = 0;

  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("q=")) {
      if (!rows.empty() || declared_q != 0) throw ParseError(line_no, "q directive must precede all rows");
      const auto digits = line.substr(2);
      const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), declared_q);
      if (ec != std::errc{} || ptr != digits.data() + digits.size())
        throw ParseError(line_no, "malformed q directive");
      if (declared_q < 2 || declared_q > kMaxAlphabet) throw ParseError(line_no, "q must be in [2, 10]");
      continue;
    }

    std::vector<Symbol> row;
    row.reserve(line.size());
    for (char ch : line) {
      if (ch < '0' || ch > '9') throw ParseError(line_no, std::string("non-digit symbol '") + ch + "'");
      const auto s = static_cast<unsigned>(ch - '0');
      if (declared_q != 0 && s >= declared_q)
        throw ParseError(line_no, "symbol " + std::to_string(s) + " not below declared q=" + std::to_string(declared_q));
      max_symbol = std::max(max_symbol, s);
      row.push_back(static_cast<Symbol>(s));
    }
    if (rows.empty()) {
      first_row_line = line_no;
    } else if (row.size() != rows.front().size()) {
      throw ParseError(line_no, "ragged rows: expected " + std::to_string(rows.front().size()) + " symbols, got " +
                                    std::to_string(row.size()) + " (first row on line " +
                                    std::to_string(first_row_line) + ")");
    }
    rows.push_back(std::move(row));
  }

  if (rows.empty()) throw ParseError(line_no, "empty input");
  const unsigned q = declared_q != 0 ? declared_q : std::max(2U, max_symbol + 1);
  return CodeMatrix(std::move(rows), q);
}

std::string serialize(const CodeMatrix& m) {
  std::string out;
  unsigned max_symbol = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (Symbol s : m.row(r)) max_symbol = std::max<unsigned>(max_symbol, s);
  if (m.alphabet() != std::max(2U, max_symbol + 1)) out += "q=" + std::to_string(m.alphabet()) + "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += m.row_string(r);
    out += '\n';
  }
  return out;
}

CodeMatrix to_standard_form(const CodeMatrix& m) {
  require_binary(m, "to_standard_form");
  const std::size_t n = m.cols();
  std::vector<std::vector<Symbol>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto src = m.row(r);
    std::vector<Symbol> row(src.begin(), src.end());
    std::vector<Symbol> comp(row.size());
    std::transform(row.begin(), row.end(), comp.begin(), [](Symbol s) { return static_cast<Symbol>(1 - s); });
    const auto ones = static_cast<std::size_t>(std::count(row.begin(), row.end(), Symbol{1}));
    if (2 * ones > n || (2 * ones == n && comp < row)) row = std::move(comp);
    rows[r] = std::move(row);
  }
  return CodeMatrix(std::move(rows), 2);
}

bool is_standard_form(const CodeMatrix& m) {
  if (!m.is_binary()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    if (2 * static_cast<std::size_t>(std::count(row.begin(), row.end(), Symbol{1})) > m.cols()) return false;
  }
  return true;
}

std::size_t row_type(const CodeMatrix& m, std::size_t r) {
  require_binary(m, "row_type");
  require_row(m, r);
  auto row = m.row(r);
  return static_cast<std::size_t>(std::count(row.begin(), row.end(), Symbol{1}));
}

std::size_t overlap(const CodeMatrix& m, std::size_t r1, std::size_t r2) {
  require_binary(m, "overlap");
  require_row(m, r1);
  require_row(m, r2);
  if (r1 == r2) throw std::invalid_argument("overlap: rows must be distinct");
  std::size_t s = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) s += (m.at(r1, c) & m.at(r2, c));
  return s;
}

bool is_permutation_matrix(const CodeMatrix& m) {
  if (!m.is_binary() || m.rows() != m.cols()) return false;
  std::vector<std::size_t> col_ones(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t ones = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) == 1) {
        ++ones;
        ++col_ones[c];
      }
    }
    if (ones != 1) return false;
  }
  return std::all_of(col_ones.begin(), col_ones.end(), [](std::size_t k) { return k == 1; });
}

}  // namespace shf
