#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "shf/constructions.hpp"
#include "shf/separation.hpp"

namespace shf {
namespace {

CodeMatrix random_binary(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::vector<std::vector<Symbol>> grid(rows, std::vector<Symbol>(cols));
  for (auto& row : grid)
    for (auto& x : row) x = static_cast<Symbol>(rng() & 1U);
  return CodeMatrix(std::move(grid), 2);
}

std::vector<oracle::Row> as_rows(const CodeMatrix& m) {
  std::vector<oracle::Row> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  return rows;
}

SeparationQuery q1w(std::size_t x, std::vector<std::size_t> c2) { return {{{x}, std::move(c2)}}; }

TEST(ShfType, Parse) {
  EXPECT_EQ(ShfType::parse("1,3").parts(), (std::vector<std::size_t>{1, 3}));
  EXPECT_EQ(ShfType::parse("2,2,1").total(), 5u);
  EXPECT_TRUE(ShfType::parse("1,4").is_one_vs_w());
  EXPECT_THROW(ShfType::parse("3"), std::invalid_argument);
  EXPECT_THROW(ShfType::parse("1,0"), std::invalid_argument);
  EXPECT_THROW(ShfType::parse("1,,2"), std::invalid_argument);
  EXPECT_THROW(ShfType::parse("a,2"), std::invalid_argument);
}

TEST(RowSeparates, IdentityExamples) {
  const CodeMatrix id = permutation_code(3);
  EXPECT_TRUE(row_separates(id, 0, q1w(0, {1, 2})));
  EXPECT_FALSE(row_separates(id, 1, q1w(0, {1, 2})));
}

TEST(RowSeparates, LeadingPairRow) {
  // Row 1100...0 separates column 1 from columns 2..w+1.
  const CodeMatrix m = parse_matrix("1100000\n");
  EXPECT_TRUE(row_separates(m, 0, q1w(1, {2, 3, 4, 5})));
  EXPECT_FALSE(row_separates(m, 0, q1w(1, {0, 3, 4, 5})));
}

TEST(RowSeparates, Errors) {
  const CodeMatrix id = permutation_code(3);
  EXPECT_THROW(row_separates(id, 0, q1w(0, {0, 1})), std::invalid_argument);
  EXPECT_THROW(row_separates(id, 0, q1w(0, {1, 5})), std::out_of_range);
  EXPECT_THROW(row_separates(id, 3, q1w(0, {1, 2})), std::out_of_range);
}

TEST(RowSeparates, GeneralTypeOverQ) {
  const CodeMatrix m({{0, 0, 1, 2, 2}}, 3);
  EXPECT_TRUE(row_separates(m, 0, {{{0, 1}, {2}, {3, 4}}}));
  EXPECT_FALSE(row_separates(m, 0, {{{0, 2}, {3}, {1}}}));
}

TEST(IsShf, PermutationMatrices) {
  for (std::size_t N = 2; N <= 7; ++N)
    for (std::size_t w = 1; w + 1 <= N; ++w) {
      const auto rep = is_shf(permutation_code(N), ShfType::one_vs(w));
      EXPECT_TRUE(rep.verdict) << N << " " << w;
      EXPECT_FALSE(rep.vacuous);
      EXPECT_EQ(rep.total_queries, total_pairs(N, w));
      EXPECT_EQ(std::accumulate(rep.new_pairs.begin(), rep.new_pairs.end(), Count{0}), rep.total_queries);
    }
}

TEST(IsShf, NonPermutationFourByFour) {
  EXPECT_TRUE(is_shf(non_perm_4x4(), ShfType::one_vs(2)).verdict);
  EXPECT_FALSE(is_shf(non_perm_4x4(), ShfType::one_vs(3)).verdict);
}

TEST(IsShf, DuplicateColumnsGiveWitnessContainingBoth) {
  const CodeMatrix m = parse_matrix("1001\n0100\n0010\n");
  const auto rep = is_shf(m, ShfType::one_vs(2));
  ASSERT_FALSE(rep.verdict);
  ASSERT_TRUE(rep.witness);
  // Least failing query: ({0}, {1,3}) since column 3 duplicates column 0.
  EXPECT_EQ(rep.witness->parts, (std::vector<std::vector<std::size_t>>{{0}, {1, 3}}));
}

TEST(IsShf, WitnessIsLexicographicallyLeast) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const CodeMatrix m = random_binary(rng, 3, 6);
    const auto rep = is_shf(m, ShfType::one_vs(2));
    if (rep.verdict) continue;
    const std::vector<oracle::Row> rows = as_rows(m);
    std::optional<SeparationQuery> least;
    oracle::for_each_pair_query(6, 2, [&](std::size_t x, const std::vector<std::size_t>& c2) {
      if (least) return;
      bool sep = false;
      for (const auto& r : rows) sep = sep || oracle::separates(r, x, c2);
      if (!sep) least = q1w(x, c2);
    });
    ASSERT_TRUE(least);
    EXPECT_EQ(*rep.witness, *least);
  }
}

TEST(IsShf, VacuousWhenTooFewColumns) {
  const auto rep = is_shf(permutation_code(3), ShfType::one_vs(3));
  EXPECT_TRUE(rep.verdict);
  EXPECT_TRUE(rep.vacuous);
  EXPECT_EQ(rep.total_queries, 0u);
}

TEST(IsShf, BudgetGuard) {
  VerifyOptions opts;
  opts.query_budget = 10;
  EXPECT_THROW(is_shf(permutation_code(6), ShfType::one_vs(3), opts), BudgetExceeded);
}

TEST(IsShf, GeneralTypeMatchesBruteForce) {
  std::mt19937_64 rng(17);
  const ShfType types[] = {ShfType({2, 2}), ShfType({1, 1, 1}), ShfType({2, 1, 1}), ShfType({1, 2})};
  for (int trial = 0; trial < 60; ++trial) {
    const unsigned q = 2 + static_cast<unsigned>(rng() % 3);
    std::vector<std::vector<Symbol>> grid(4, std::vector<Symbol>(5));
    for (auto& row : grid)
      for (auto& x : row) x = static_cast<Symbol>(rng() % q);
    const CodeMatrix m(grid, q);
    for (const ShfType& t : types) {
      // Brute force: every assignment of columns to parts (or unused).
      const std::size_t parts = t.parts().size();
      bool all = true;
      Count queries = 0;
      const std::size_t base = parts + 1;
      std::size_t total = 1;
      for (int i = 0; i < 5; ++i) total *= base;
      for (std::size_t code = 0; code < total; ++code) {
        std::size_t x = code;
        SeparationQuery query;
        query.parts.resize(parts);
        for (std::size_t c = 0; c < 5; ++c, x /= base)
          if (x % base) query.parts[x % base - 1].push_back(c);
        bool sized = true;
        for (std::size_t p = 0; p < parts; ++p) sized = sized && query.parts[p].size() == t.parts()[p];
        if (!sized) continue;
        ++queries;
        bool sep = false;
        for (std::size_t r = 0; r < m.rows() && !sep; ++r) {
          unsigned seen = 0;
          bool disjoint = true;
          for (const auto& part : query.parts) {
            unsigned s = 0;
            for (std::size_t c : part) s |= 1U << m.at(r, c);
            disjoint = disjoint && !(s & seen);
            seen |= s;
          }
          sep = disjoint;
        }
        all = all && sep;
      }
      const auto rep = is_shf(m, t);
      EXPECT_EQ(rep.verdict, all) << t.to_string();
      EXPECT_EQ(rep.total_queries, queries) << t.to_string();
    }
  }
}

TEST(IsShf, ParallelMatchesSequential) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const CodeMatrix m = random_binary(rng, 4, 7);
    VerifyOptions one;
    VerifyOptions many;
    many.threads = 4;
    const auto a = is_shf(m, ShfType::one_vs(2), one);
    const auto b = is_shf(m, ShfType::one_vs(2), many);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.row_counts, b.row_counts);
    EXPECT_EQ(a.new_pairs, b.new_pairs);
    const auto g1 = is_shf(m, ShfType({2, 2}), one);
    const auto g4 = is_shf(m, ShfType({2, 2}), many);
    EXPECT_EQ(g1.witness, g4.witness);
  }
}

TEST(IsShf, EarlyExitAgreesWithFullRun) {
  std::mt19937_64 rng(29);
  VerifyOptions fast;
  fast.collect_stats = false;
  for (int trial = 0; trial < 200; ++trial) {
    const CodeMatrix m = random_binary(rng, 4, 6);
    const auto a = is_shf(m, ShfType::one_vs(2));
    const auto b = is_shf(m, ShfType::one_vs(2), fast);
    EXPECT_EQ(a.verdict, b.verdict);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_FALSE(b.has_stats);
  }
}

TEST(IsShf, InvariantUnderRowColumnPermutationAndComplement) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const CodeMatrix m = random_binary(rng, 4, 6);
    std::vector<std::size_t> rp(4), cp(6);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    const unsigned flips = static_cast<unsigned>(rng() & 0xF);
    std::vector<std::vector<Symbol>> grid(4, std::vector<Symbol>(6));
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 6; ++c) grid[r][c] = static_cast<Symbol>(m.at(rp[r], cp[c]) ^ ((flips >> r) & 1U));
    const CodeMatrix t(grid, 2);
    for (std::size_t w : {1, 2, 3})
      EXPECT_EQ(is_shf(m, ShfType::one_vs(w)).verdict, is_shf(t, ShfType::one_vs(w)).verdict);
    EXPECT_EQ(is_shf(m, ShfType::one_vs(2)).verdict, is_shf(to_standard_form(m), ShfType::one_vs(2)).verdict);
  }
}

TEST(IsShf, CountingBoundIsNecessary) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 500; ++trial) {
    const CodeMatrix m = random_binary(rng, 2 + rng() % 4, 4 + rng() % 3);
    for (std::size_t w : {1, 2, 3}) {
      if (!is_shf(m, ShfType::one_vs(w)).verdict) continue;
      Count capacity = 0;
      for (const auto& p : row_profiles(m, w)) capacity += p.separated_pairs;
      EXPECT_GE(capacity, total_pairs(m.cols(), w));
    }
  }
}

TEST(Frameproof, Examples) {
  EXPECT_TRUE(is_frameproof(permutation_code(4), 3));
  const CodeMatrix m = parse_matrix("010\n001\n000\n");  // columns 000, 100, 010
  EXPECT_FALSE(is_frameproof(m, 2));
  const auto v = find_frameproof_violation(m, 2);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->coalition, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(v->forged, 0u);
  for (std::size_t N = 1; N <= 4; ++N)
    for (unsigned q = 2; q <= 4; ++q)
      for (std::size_t w = 1; w <= 4; ++w) EXPECT_TRUE(is_frameproof(weight_one_code(N, q), w));
}

TEST(Frameproof, EquivalentToShfOverQ) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const unsigned q = 2 + static_cast<unsigned>(rng() % 3);
    std::vector<std::vector<Symbol>> grid(3, std::vector<Symbol>(5));
    for (auto& row : grid)
      for (auto& x : row) x = static_cast<Symbol>(rng() % q);
    const CodeMatrix m(grid, q);
    for (std::size_t w : {1, 2, 3, 4})
      EXPECT_EQ(is_frameproof(m, w), is_shf(m, ShfType::one_vs(w)).verdict) << w;
  }
}

TEST(CountPairsRow, PublishedValues) {
  EXPECT_EQ(count_pairs_row(5, 3, 1), 4u);
  EXPECT_EQ(count_pairs_row(8, 3, 2), 40u);
  EXPECT_EQ(count_pairs_row(9, 3, 4), 60u);
  EXPECT_EQ(count_pairs_row(7, 3, 0), 0u);
  EXPECT_THROW(count_pairs_row(3, 1, 4), std::invalid_argument);
}

TEST(CountPairsRow, MatchesBruteForceIncludingHeavyRows) {
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t w = 1; w <= 4; ++w)
      for (std::size_t i = 0; i <= n; ++i) {
        EXPECT_EQ(count_pairs_row(n, w, i), oracle::row_pairs(oracle::prefix_row(n, i), w)) << n << w << i;
        EXPECT_EQ(count_pairs_row(n, w, i), count_pairs_row(n, w, n - i));
      }
}

TEST(CommonPairs, PublishedValues) {
  EXPECT_EQ(common_pairs(9, 3, 4, 4, 3), 16u);
  EXPECT_EQ(common_pairs(9, 3, 4, 4, 0), 32u);
  EXPECT_EQ(common_pairs(9, 3, 4, 4, 2), 2u);
  EXPECT_EQ(common_pairs(9, 3, 4, 4, 1), 6u);
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t w = 2; w <= 4; ++w) EXPECT_EQ(common_pairs(n, w, 1, 1, 0), 0u);
}

TEST(CommonPairs, Preconditions) {
  EXPECT_THROW(common_pairs(9, 3, 2, 4, 3), std::invalid_argument);
  EXPECT_THROW(common_pairs(6, 3, 4, 4, 1), std::invalid_argument);
}

TEST(CommonPairs, MatchesConcreteRows) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t w = 1; w <= 3; ++w)
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j)
          for (std::size_t s = 0; s <= std::min(i, j); ++s) {
            if (i + j - s > n) continue;
            EXPECT_EQ(common_pairs(n, w, i, j, s),
                      oracle::both_pairs(oracle::prefix_row(n, i), oracle::overlap_partner(n, i, j, s), w));
          }
}

TEST(TotalPairs, ValuesAndIdentity) {
  EXPECT_EQ(total_pairs(5, 3), 20u);
  EXPECT_EQ(total_pairs(8, 3), 280u);
  EXPECT_EQ(total_pairs(9, 3), 504u);
  EXPECT_EQ(total_pairs(3, 3), 0u);
  for (std::size_t n = 1; n <= 20; ++n)
    for (std::size_t w = 1; w < n; ++w) {
      EXPECT_EQ(total_pairs(n, w), n * binomial(n - 1, w));
      if (n <= 9) EXPECT_EQ(total_pairs(n, w), oracle::pair_query_count(n, w));
    }
}

TEST(NewPairs, PermutationMatrix) {
  EXPECT_EQ(new_pairs_sequence(permutation_code(5), 3), (std::vector<Count>{4, 4, 4, 4, 4}));
}

TEST(NewPairs, DuplicateRowAddsNothing) {
  const CodeMatrix m = parse_matrix("10000\n01000\n01000\n00100\n");
  EXPECT_EQ(new_pairs_sequence(m, 2)[2], 0u);
}

TEST(NewPairs, ReplacedLastRow) {
  // Identity 6x6 whose last row is 110000: fully overlapped by rows 0 and 1.
  const CodeMatrix m = parse_matrix("100000\n010000\n001000\n000100\n000010\n110000\n");
  const auto mu = new_pairs_sequence(m, 3);
  EXPECT_EQ(mu, (std::vector<Count>{10, 10, 10, 10, 10, 0}));
  EXPECT_EQ(count_pairs_row(6, 3, 2), 8u);
}

TEST(NewPairs, MatchesEnumeration) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const CodeMatrix m = random_binary(rng, 1 + rng() % 5, 3 + rng() % 4);
    for (std::size_t w = 1; w + 1 <= m.cols(); ++w) {
      const auto rows = as_rows(m);
      EXPECT_EQ(new_pairs_sequence(m, w), oracle::first_separator_counts(rows, w));
      const auto rep = is_shf(m, ShfType::one_vs(w));
      const Count covered = std::accumulate(rep.new_pairs.begin(), rep.new_pairs.end(), Count{0});
      EXPECT_EQ(covered, oracle::covered_pairs(rows, w));
      EXPECT_EQ(covered == rep.total_queries, rep.verdict);
      for (std::size_t r = 0; r < m.rows(); ++r)
        EXPECT_EQ(rep.row_counts[r], count_pairs_row(m.cols(), w, row_type(m, r)));
    }
  }
}

TEST(OverlapProfile, QuadrantsSumToN) {
  const CodeMatrix m = parse_matrix("111100000\n110011000\n");
  const auto p = overlap_profile(m, 0, 1, 3);
  EXPECT_EQ(p.s, 2u);
  EXPECT_EQ(p.both_one + p.first_only + p.second_only + p.both_zero, 9u);
  EXPECT_EQ(p.theta, 2u);
}

}  // namespace
}  // namespace shf
