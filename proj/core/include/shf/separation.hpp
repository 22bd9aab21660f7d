#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shf/combinatorics.hpp"
#include "shf/matrix.hpp"

namespace shf {

/// Part sizes {w1, ..., wt} of a separating hash family.
class ShfType {
 public:
  explicit ShfType(std::vector<std::size_t> parts);

  /// The frameproof type {1, w}.
  static ShfType one_vs(std::size_t w) { return ShfType({1, w}); }
  /// Parses "1,3" or "2,2,1".
  static ShfType parse(std::string_view text);

  const std::vector<std::size_t>& parts() const noexcept { return parts_; }
  std::size_t total() const noexcept;
  bool is_one_vs_w() const noexcept { return parts_.size() == 2 && parts_[0] == 1; }
  std::string to_string() const;

 private:
  std::vector<std::size_t> parts_;
};

/// Ordered tuple of pairwise disjoint column sets, each sorted ascending.
struct SeparationQuery {
  std::vector<std::vector<std::size_t>> parts;

  friend bool operator==(const SeparationQuery&, const SeparationQuery&) = default;
  friend auto operator<=>(const SeparationQuery&, const SeparationQuery&) = default;
};

struct SeparationReport {
  bool verdict = false;
  /// Set when n < sum of part sizes: no query exists and the verdict is true.
  bool vacuous = false;
  std::optional<SeparationQuery> witness;
  /// Number of queries of the type (T for type {1,w}).
  Count total_queries = 0;
  /// Queries separated by each row.
  std::vector<Count> row_counts;
  /// Queries first separated by each row, in row order.
  std::vector<Count> new_pairs;
  /// False when the run stopped at the first failure without gathering coverage.
  bool has_stats = false;
};

struct VerifyOptions {
  /// Refuse to enumerate more raw queries than this.
  Count query_budget = 100'000'000;
  unsigned threads = 1;
  /// Enumerate all queries to fill the coverage fields. When false the run
  /// stops at the first failing query.
  bool collect_stats = true;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// True iff the symbol sets of the query parts on row r are pairwise disjoint.
bool row_separates(const CodeMatrix& m, std::size_t r, const SeparationQuery& query);

/// Number of ordered disjoint query tuples of this type over n columns.
Count query_count(std::size_t n, const ShfType& type);

/// Checks every query of the type. On failure the witness is the
/// lexicographically least unseparated query (C1 first, then C2, ...).
SeparationReport is_shf(const CodeMatrix& m, const ShfType& type, const VerifyOptions& opts = {});

/// A coalition P and a codeword outside it that P can forge.
struct FrameproofViolation {
  std::vector<std::size_t> coalition;
  std::size_t forged = 0;
};

/// Direct descendant-set check over all coalitions of size 1..w.
std::optional<FrameproofViolation> find_frameproof_violation(const CodeMatrix& m, std::size_t w);
bool is_frameproof(const CodeMatrix& m, std::size_t w);

/// Pairs ({x}, C2) with |C2| = w separated by one binary row of weight i
/// in a matrix with n columns.
Count count_pairs_row(std::size_t n, std::size_t w, std::size_t i);

/// Pairs separated by both of two binary rows of weights i and j whose
/// supports share s columns.
Count common_pairs(std::size_t n, std::size_t w, std::size_t i, std::size_t j, std::size_t s);

/// T = (n - w) * C(n, w): all ({x}, C2) pairs with |C2| = w.
Count total_pairs(std::size_t n, std::size_t w);

/// mu_r: pairs separated by row r and by no earlier row (binary, type {1,w}).
std::vector<Count> new_pairs_sequence(const CodeMatrix& m, std::size_t w);

struct OverlapProfile {
  std::size_t s = 0;
  std::size_t both_one = 0;    // |f(1,1)|
  std::size_t first_only = 0;  // |f(1,0)|
  std::size_t second_only = 0; // |f(0,1)|
  std::size_t both_zero = 0;   // |f(0,0)|
  Count theta = 0;
};

OverlapProfile overlap_profile(const CodeMatrix& m, std::size_t r1, std::size_t r2, std::size_t w);

/// Row types and per-row counts for type {1,w}.
std::vector<RowProfile> row_profiles(const CodeMatrix& m, std::size_t w);

}  // namespace shf
