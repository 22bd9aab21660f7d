#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace shf {

using Symbol = std::uint8_t;

/// Largest alphabet representable in the single-character text format.
inline constexpr unsigned kMaxAlphabet = 10;

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// N x n matrix over {0, ..., q-1}. Rows are hash functions, columns are
/// codewords. Immutable once built.
class CodeMatrix {
 public:
  CodeMatrix() = default;
  /// Throws std::invalid_argument on ragged rows, out-of-range symbols,
  /// empty shape, or q outside [2, 10].
  CodeMatrix(std::vector<std::vector<Symbol>> rows, unsigned q);

  /// Binary matrix from column values; row r of column c is bit (rows-1-r)
  /// of values[c], i.e. the column read top-to-bottom as a base-2 integer.
  static CodeMatrix from_column_values(std::span<const std::uint64_t> values, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  unsigned alphabet() const noexcept { return q_; }
  bool is_binary() const noexcept { return q_ == 2; }

  Symbol at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Symbol> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Symbol> column(std::size_t c) const;

  /// Binary only, rows() <= 64: the column as a base-2 integer, top row most significant.
  std::uint64_t column_value(std::size_t c) const;

  std::string row_string(std::size_t r) const;

  friend bool operator==(const CodeMatrix&, const CodeMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  unsigned q_ = 2;
  std::vector<Symbol> data_;
};

/// Per-row summary used by the counting arguments.
struct RowProfile {
  std::size_t row = 0;
  std::size_t type = 0;            // number of 1 entries
  std::uint64_t separated_pairs = 0;
};

/// Parses the text format: one row per line, digits only, '#' comments,
/// blank lines ignored, optional leading "q=<int>" directive.
CodeMatrix parse_matrix(std::string_view text);

/// Inverse of parse_matrix. Emits the q directive only when the alphabet
/// differs from the one parse_matrix would infer.
std::string serialize(const CodeMatrix& m);

/// Complements each row whose weight exceeds n/2. A row with exactly n/2
/// ones becomes the lexicographically smaller of itself and its complement.
CodeMatrix to_standard_form(const CodeMatrix& m);

/// True if m is binary and no row has more than n/2 ones.
bool is_standard_form(const CodeMatrix& m);

std::size_t row_type(const CodeMatrix& m, std::size_t r);

/// Number of columns where both rows carry a 1.
std::size_t overlap(const CodeMatrix& m, std::size_t r1, std::size_t r2);

bool is_permutation_matrix(const CodeMatrix& m);

}  // namespace shf
