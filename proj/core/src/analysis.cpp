#include "shf/analysis.hpp"

#include <numeric>
#include <stdexcept>

#include "shf/separation.hpp"

namespace shf {

Count ssw_bound(std::size_t N, unsigned q, std::size_t w) {
  if (N == 0 || w == 0 || q < 2) throw std::invalid_argument("ssw_bound: needs N, w >= 1 and q >= 2");
  const auto exponent = static_cast<unsigned>((N + w - 1) / w);
  return checked_mul(w, checked_pow(q, exponent) - 1);
}

BoundReport ssw_bound_report(std::size_t N, unsigned q, std::size_t w) {
  return {"ssw", N, q, w, std::nullopt, ssw_bound(N, q, w)};
}

std::optional<Count> tran_bound(std::size_t N, unsigned q, std::size_t w) {
  if (w < 2 || q < w || N == 0 || (N - 1) % w != 0) return std::nullopt;
  const std::size_t d = (N - 1) / w;
  if (d == 0) return std::nullopt;
  return checked_pow(q, static_cast<unsigned>(d + 1));
}

std::optional<BoundReport> tran_bound_report(std::size_t N, unsigned q, std::size_t w) {
  const auto value = tran_bound(N, q, w);
  if (!value) return std::nullopt;
  return BoundReport{"tran", N, q, w, (N - 1) / w, *value};
}

bool binomial_chain_holds(std::size_t n, std::size_t w) {
  if (w + 1 > n) throw std::invalid_argument("binomial_chain_holds: needs w + 1 <= n");
  for (std::size_t j = 1; j + 1 <= n - w; ++j) {
    if (!(checked_mul(j, binomial(n - j, w)) > checked_mul(j + 1, binomial(n - j - 1, w)))) return false;
  }
  return true;
}

Rational average_pairs_per_row(std::size_t n, std::size_t w, std::size_t N) {
  if (N == 0) throw std::invalid_argument("average_pairs_per_row: N must be positive");
  return Rational(total_pairs(n, w), N);
}

MatrixDiagnostics diagnose(const CodeMatrix& m, std::size_t w) {
  if (!m.is_binary()) throw std::invalid_argument("diagnose: matrix is not binary");
  MatrixDiagnostics d;
  d.rows = m.rows();
  d.cols = m.cols();
  d.w = w;
  for (const RowProfile& p : row_profiles(m, w)) {
    d.row_types.push_back(p.type);
    d.row_pairs.push_back(p.separated_pairs);
    d.row_pairs_sum = checked_add(d.row_pairs_sum, p.separated_pairs);
    d.beta[p.type] = p.separated_pairs;
    if (p.type == 0 || p.type == m.cols()) d.constant_rows.push_back(p.row);
  }
  d.total = total_pairs(m.cols(), w);
  d.alpha = average_pairs_per_row(m.cols(), w, m.rows());
  d.mu = new_pairs_sequence(m, w);
  const Count covered = std::accumulate(d.mu.begin(), d.mu.end(), Count{0});
  d.uncovered = d.total - covered;
  return d;
}

}  // namespace shf
