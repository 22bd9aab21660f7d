#pragma once

#include <cstddef>

#include "shf/matrix.hpp"

namespace shf {

/// N x N identity: an SHF(N; N, 2, {1,w}) for every w <= N-1.
CodeMatrix permutation_code(std::size_t N);

/// N x N(q-1) code whose codewords all have weight one. Column
/// r*(q-1) + (k-1) carries symbol k in row r. An SHF(N; N(q-1), q, {1,w})
/// for every w.
CodeMatrix weight_one_code(std::size_t N, unsigned q);

/// Identity with an all-ones column appended; an SHF(N; N+1, 2, {1,2}) for N >= 3.
CodeMatrix identity_plus_ones(std::size_t N);

/// The 4 x 4 SHF(4; 4, 2, {1,2}) that is not a permutation matrix:
///   1100 / 0110 / 1010 / 0001
CodeMatrix non_perm_4x4();

/// For every ordered pair of distinct columns (x, y) some row has a 1 at x
/// and a 0 at y.
bool has_row_pair_property(const CodeMatrix& a);

/// Block diagonal diag(A, I_k). A must be binary and have the row-pair property.
CodeMatrix block_extend(const CodeMatrix& a, std::size_t k);

}  // namespace shf
