#include "oracles.hpp"

namespace shf::oracle {

bool separates(const Row& row, std::size_t x, const std::vector<std::size_t>& c2) {
  for (std::size_t c : c2)
    if (row[c] == row[x]) return false;
  return true;
}

std::uint64_t row_pairs(const Row& row, std::size_t w) {
  std::uint64_t count = 0;
  for_each_pair_query(row.size(), w, [&](std::size_t x, const std::vector<std::size_t>& c2) {
    if (separates(row, x, c2)) ++count;
  });
  return count;
}

std::uint64_t both_pairs(const Row& a, const Row& b, std::size_t w) {
  std::uint64_t count = 0;
  for_each_pair_query(a.size(), w, [&](std::size_t x, const std::vector<std::size_t>& c2) {
    if (separates(a, x, c2) && separates(b, x, c2)) ++count;
  });
  return count;
}

std::uint64_t covered_pairs(const std::vector<Row>& rows, std::size_t w) {
  std::uint64_t count = 0;
  for_each_pair_query(rows.front().size(), w, [&](std::size_t x, const std::vector<std::size_t>& c2) {
    for (const Row& r : rows) {
      if (separates(r, x, c2)) {
        ++count;
        return;
      }
    }
  });
  return count;
}

std::vector<std::uint64_t> first_separator_counts(const std::vector<Row>& rows, std::size_t w) {
  std::vector<std::uint64_t> mu(rows.size(), 0);
  for_each_pair_query(rows.front().size(), w, [&](std::size_t x, const std::vector<std::size_t>& c2) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (separates(rows[r], x, c2)) {
        ++mu[r];
        return;
      }
    }
  });
  return mu;
}

std::uint64_t pair_query_count(std::size_t n, std::size_t w) {
  std::uint64_t count = 0;
  for_each_pair_query(n, w, [&](std::size_t, const std::vector<std::size_t>&) { ++count; });
  return count;
}

Row prefix_row(std::size_t n, std::size_t i) {
  Row row(n, 0);
  for (std::size_t c = 0; c < i; ++c) row[c] = 1;
  return row;
}

Row overlap_partner(std::size_t n, std::size_t i, std::size_t j, std::size_t s) {
  // Shared ones in [0, s); the partner's own ones start right after the first row's support.
  Row row(n, 0);
  for (std::size_t c = 0; c < s; ++c) row[c] = 1;
  for (std::size_t c = 0; c < j - s; ++c) row[i + c] = 1;
  return row;
}

}  // namespace shf::oracle
