#include "shf/constructions.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace shf {

CodeMatrix permutation_code(std::size_t N) {
  if (N == 0) throw std::invalid_argument("permutation_code: N must be at least 1");
  std::vector<std::vector<Symbol>> rows(N, std::vector<Symbol>(N, 0));
  for (std::size_t r = 0; r < N; ++r) rows[r][r] = 1;
  return CodeMatrix(std::move(rows), 2);
}

CodeMatrix weight_one_code(std::size_t N, unsigned q) {
  if (N == 0) throw std::invalid_argument("weight_one_code: N must be at least 1");
  if (q < 2 || q > kMaxAlphabet) throw std::invalid_argument("weight_one_code: q must be in [2, 10]");
  const std::size_t block = q - 1;
  std::vector<std::vector<Symbol>> rows(N, std::vector<Symbol>(N * block, 0));
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t k = 1; k <= block; ++k) rows[r][r * block + (k - 1)] = static_cast<Symbol>(k);
  return CodeMatrix(std::move(rows), q);
}

CodeMatrix identity_plus_ones(std::size_t N) {
  if (N < 3) throw std::invalid_argument("identity_plus_ones: N must be at least 3");
  std::vector<std::vector<Symbol>> rows(N, std::vector<Symbol>(N + 1, 0));
  for (std::size_t r = 0; r < N; ++r) {
    rows[r][r] = 1;
    rows[r][N] = 1;
  }
  return CodeMatrix(std::move(rows), 2);
}

CodeMatrix non_perm_4x4() {
  return CodeMatrix({{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}}, 2);
}

bool has_row_pair_property(const CodeMatrix& a) {
  if (!a.is_binary()) return false;
  for (std::size_t x = 0; x < a.cols(); ++x) {
    for (std::size_t y = 0; y < a.cols(); ++y) {
      if (x == y) continue;
      bool found = false;
      for (std::size_t r = 0; r < a.rows() && !found; ++r) found = a.at(r, x) == 1 && a.at(r, y) == 0;
      if (!found) return false;
    }
  }
  return true;
}

CodeMatrix block_extend(const CodeMatrix& a, std::size_t k) {
  if (!a.is_binary()) throw std::invalid_argument("block_extend: matrix is not binary");
  if (!has_row_pair_property(a)) throw std::invalid_argument("block_extend: matrix lacks the row-pair property");
  const std::size_t rows = a.rows() + k;
  const std::size_t cols = a.cols() + k;
  std::vector<std::vector<Symbol>> out(rows, std::vector<Symbol>(cols, 0));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r][c] = a.at(r, c);
  for (std::size_t i = 0; i < k; ++i) out[a.rows() + i][a.cols() + i] = 1;
  return CodeMatrix(std::move(out), 2);
}

}  // namespace shf
