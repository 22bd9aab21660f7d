#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "shf/combinatorics.hpp"
#include "shf/matrix.hpp"

namespace shf {

struct BoundReport {
  std::string name;
  std::size_t N = 0;
  unsigned q = 0;
  std::size_t w = 0;
  std::optional<std::size_t> d;  // only for the N = wd + 1 bound
  Count value = 0;
};

/// n <= w (q^ceil(N/w) - 1), valid for any (N, n, q) w-frameproof code.
Count ssw_bound(std::size_t N, unsigned q, std::size_t w);
BoundReport ssw_bound_report(std::size_t N, unsigned q, std::size_t w);

/// n <= q^(d+1) when N = wd + 1 and q >= w >= 2; nullopt otherwise.
std::optional<Count> tran_bound(std::size_t N, unsigned q, std::size_t w);
std::optional<BoundReport> tran_bound_report(std::size_t N, unsigned q, std::size_t w);

/// Whether C(n-1,w) > 2 C(n-2,w) > ... > (n-w) C(w,w) holds strictly.
/// Requires w + 1 <= n.
bool binomial_chain_holds(std::size_t n, std::size_t w);

/// Average pairs per row, total_pairs(n, w) / N, exactly.
Rational average_pairs_per_row(std::size_t n, std::size_t w, std::size_t N);

struct MatrixDiagnostics {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t w = 0;
  std::vector<std::size_t> row_types;
  std::vector<Count> row_pairs;      // count_pairs_row for each row
  Count row_pairs_sum = 0;           // counting-bound capacity of the matrix
  Count total = 0;                   // T
  Rational alpha;                    // T / N
  std::map<std::size_t, Count> beta; // row type -> pairs separated by such a row
  std::vector<Count> mu;
  Count uncovered = 0;               // T - sum(mu)
  std::vector<std::size_t> constant_rows;  // type 0 or type n
};

/// Binary matrices only.
MatrixDiagnostics diagnose(const CodeMatrix& m, std::size_t w);

}  // namespace shf
