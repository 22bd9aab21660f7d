#pragma once

// Brute-force reference computations. Deliberately share no code with the
// library's counting or checking paths: plain vectors, plain loops.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace shf::oracle {

using Row = std::vector<int>;

/// Calls fn(x, c2) for every ({x}, C2) with |C2| = w over n columns.
template <typename Fn>
void for_each_pair_query(std::size_t n, std::size_t w, Fn&& fn) {
  std::vector<std::size_t> c2;
  auto rec = [&](auto&& self, std::size_t x, std::size_t start) -> void {
    if (c2.size() == w) {
      fn(x, c2);
      return;
    }
    for (std::size_t c = start; c < n; ++c) {
      if (c == x) continue;
      c2.push_back(c);
      self(self, x, c + 1);
      c2.pop_back();
    }
  };
  for (std::size_t x = 0; x < n; ++x) rec(rec, x, 0);
}

/// Row value at x differs from every value on C2.
bool separates(const Row& row, std::size_t x, const std::vector<std::size_t>& c2);

/// Queries ({x}, C2), |C2| = w, separated by `row`.
std::uint64_t row_pairs(const Row& row, std::size_t w);

/// Queries separated by both rows.
std::uint64_t both_pairs(const Row& a, const Row& b, std::size_t w);

/// Queries separated by at least one row of the matrix (rows as vectors).
std::uint64_t covered_pairs(const std::vector<Row>& rows, std::size_t w);

/// mu sequence by direct enumeration.
std::vector<std::uint64_t> first_separator_counts(const std::vector<Row>& rows, std::size_t w);

/// Number of ({x}, C2) queries, by enumeration.
std::uint64_t pair_query_count(std::size_t n, std::size_t w);

/// Rows 1^i 0^(n-i) and a partner sharing exactly s leading ones, with j ones in all.
Row prefix_row(std::size_t n, std::size_t i);
Row overlap_partner(std::size_t n, std::size_t i, std::size_t j, std::size_t s);

}  // namespace shf::oracle
