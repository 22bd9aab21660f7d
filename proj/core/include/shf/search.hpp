#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "shf/matrix.hpp"

namespace shf {

/// Which symmetries the orderly search quotients out.
enum class Symmetry {
  /// Columns strictly increasing only. Every solution up to column order is visited.
  columns,
  /// Additionally: first column all-zero (row complementation) and second
  /// column 0..01..1 of minimum weight among nonzero columns (row
  /// permutation). Sound for existence questions only.
  rows,
};

struct SearchConfig {
  std::size_t rows = 0;  // N
  std::size_t w = 0;
  unsigned q = 2;
  /// Stop once this many columns are reached; 0 means 2^N.
  std::size_t max_columns = 0;
  /// Partial matrices expanded; 0 means unlimited.
  std::uint64_t node_budget = 0;
  /// Wall clock; zero means unlimited.
  std::chrono::milliseconds time_budget{0};
  unsigned threads = 1;
  /// Node budget is charged in task order so results do not depend on scheduling.
  bool deterministic = true;
  Symmetry symmetry = Symmetry::rows;
  /// Re-verify every accepted partial matrix with is_shf (slow; for tests).
  bool check_prefixes = false;
};

struct SearchResult {
  std::size_t best_n = 0;
  CodeMatrix witness;
  /// True when the space was exhausted (or the column cap reached) within budget.
  bool complete = false;
  std::uint64_t nodes = 0;
  std::chrono::duration<double> elapsed{0};
};

/// Largest n such that an SHF(N; n, 2, {1,w}) exists, by orderly backtracking.
/// Throws std::invalid_argument for q != 2, N outside [1, 20], or w == 0.
SearchResult max_code_search(const SearchConfig& cfg);

struct SquareSolution {
  CodeMatrix matrix;
  bool permutation_in_standard_form = false;
};

struct SquareEnumeration {
  std::vector<SquareSolution> solutions;
  bool all_permutation = true;
  bool complete = false;
  std::uint64_t nodes = 0;
  std::chrono::duration<double> elapsed{0};
};

/// All SHF(N; N, 2, {1,w}) with strictly increasing columns. Uses
/// Symmetry::columns regardless of cfg.symmetry; cfg.max_columns is ignored.
SquareEnumeration enumerate_square_shf(const SearchConfig& cfg);
SquareEnumeration enumerate_square_shf(std::size_t N, std::size_t w, std::uint64_t node_budget = 0);

/// Independent existence oracle: tries every n-subset of distinct binary
/// columns with the matrix-level checker. Refuses more than 1e9 subsets.
bool naive_enumerate(std::size_t N, std::size_t w, std::size_t n);

struct OpenProblemCell {
  std::size_t N = 0;
  SearchResult max_search;
  std::optional<SquareEnumeration> square;  // absent when skipped
  /// best_n > N found (a witness exists, so this is definite).
  bool exceeds = false;
  bool has_non_permutation_square = false;
};

struct OpenProblemReport {
  std::size_t w = 0;
  std::vector<OpenProblemCell> cells;
  /// First N with n > N; nullopt if none found in range.
  std::optional<std::size_t> first_exceeding;
  /// First N with a non-permutation square solution; nullopt if none found.
  std::optional<std::size_t> first_non_permutation;
  /// True when every cell ran to completion.
  bool complete = true;
};

struct ScanBudgets {
  std::uint64_t node_budget = 0;
  std::chrono::milliseconds time_budget{0};
  unsigned threads = 1;
  /// Square enumeration is skipped above this N.
  std::size_t max_square_N = 6;
};

OpenProblemReport open_problem_scan(std::size_t w, std::size_t N_first, std::size_t N_last, const ScanBudgets& budgets);

}  // namespace shf
