#include "shf/separation.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <thread>

namespace shf {

ShfType::ShfType(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
  if (parts_.size() < 2) throw std::invalid_argument("SHF type needs at least two parts");
  for (std::size_t p : parts_)
    if (p == 0) throw std::invalid_argument("SHF type parts must be positive");
}

ShfType ShfType::parse(std::string_view text) {
  std::vector<std::size_t> parts;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view field = text.substr(0, comma);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size())
      throw std::invalid_argument("malformed SHF type '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  return ShfType(std::move(parts));
}

std::size_t ShfType::total() const noexcept {
  std::size_t t = 0;
  for (std::size_t p : parts_) t += p;
  return t;
}

std::string ShfType::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "}";
}

bool row_separates(const CodeMatrix& m, std::size_t r, const SeparationQuery& query) {
  if (r >= m.rows()) throw std::out_of_range("row index out of range");
  std::vector<bool> used(m.cols(), false);
  for (const auto& part : query.parts) {
    for (std::size_t c : part) {
      if (c >= m.cols()) throw std::out_of_range("column index " + std::to_string(c) + " out of range");
      if (used[c]) throw std::invalid_argument("query parts overlap at column " + std::to_string(c));
      used[c] = true;
    }
  }
  unsigned seen = 0;
  for (const auto& part : query.parts) {
    unsigned symbols = 0;
    for (std::size_t c : part) symbols |= 1U << m.at(r, c);
    if (symbols & seen) return false;
    seen |= symbols;
  }
  return true;
}

Count query_count(std::size_t n, const ShfType& type) {
  Count total = 1;
  std::size_t left = n;
  for (std::size_t p : type.parts()) {
    if (p > left) return 0;
    total = checked_mul(total, binomial(left, p));
    left -= p;
  }
  return total;
}

namespace {

struct WorkerResult {
  std::optional<SeparationQuery> witness;
  std::vector<Count> row_counts;
  std::vector<Count> new_pairs;
  Count total = 0;
};

// Enumerates ordered disjoint tuples whose C1 starts at a column in `firsts`,
// in lexicographic order, and checks each against every row.
class QueryWalker {
 public:
  QueryWalker(const CodeMatrix& m, const ShfType& type, bool collect_stats)
      : m_(m), parts_(type.parts()), collect_(collect_stats), used_(m.cols(), false), query_{} {
    query_.parts.resize(parts_.size());
    result_.row_counts.assign(m.rows(), 0);
    result_.new_pairs.assign(m.rows(), 0);
    binary_fast_ = m.is_binary() && m.rows() <= 64 && type.is_one_vs_w();
    if (binary_fast_) {
      for (std::size_t c = 0; c < m.cols(); ++c) values_.push_back(m.column_value(c));
      row_mask_ = m.rows() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m.rows()) - 1;
    }
  }

  WorkerResult run(const std::vector<std::size_t>& firsts) {
    for (std::size_t first : firsts) {
      if (binary_fast_) {
        if (!walk_binary(first)) break;
      } else {
        used_[first] = true;
        query_.parts[0] = {first};
        const bool go_on = fill(0, first + 1);
        used_[first] = false;
        if (!go_on) break;
      }
    }
    return std::move(result_);
  }

 private:
  // Returns false to abort the whole walk.
  bool record(bool separated_rows_known, std::uint64_t mask) {
    ++result_.total;
    bool any = false;
    if (separated_rows_known) {
      any = mask != 0;
      if (collect_ && any) {
        const std::size_t n_rows = m_.rows();
        std::uint64_t bits = mask;
        while (bits) {
          const int b = std::countr_zero(bits);
          ++result_.row_counts[n_rows - 1 - static_cast<std::size_t>(b)];
          bits &= bits - 1;
        }
        const int top = 63 - std::countl_zero(mask);
        ++result_.new_pairs[n_rows - 1 - static_cast<std::size_t>(top)];
      }
    } else {
      bool first_found = false;
      for (std::size_t r = 0; r < m_.rows(); ++r) {
        if (!separates_generic(r)) continue;
        any = true;
        if (!collect_) break;
        ++result_.row_counts[r];
        if (!first_found) {
          ++result_.new_pairs[r];
          first_found = true;
        }
      }
    }
    if (!any && !result_.witness) {
      result_.witness = query_;
      if (!collect_) return false;
    }
    return true;
  }

  bool separates_generic(std::size_t r) const {
    unsigned seen = 0;
    for (const auto& part : query_.parts) {
      unsigned symbols = 0;
      for (std::size_t c : part) symbols |= 1U << m_.at(r, c);
      if (symbols & seen) return false;
      seen |= symbols;
    }
    return true;
  }

  // Builds part `p` from columns >= start (C1's first element is fixed by run()).
  bool fill(std::size_t p, std::size_t start) {
    auto& cur = query_.parts[p];
    if (cur.size() == parts_[p]) {
      if (p + 1 == parts_.size()) return record(false, 0);
      query_.parts[p + 1].clear();
      return fill(p + 1, 0);
    }
    const std::size_t need = parts_[p] - cur.size();
    for (std::size_t c = start; c + need <= m_.cols(); ++c) {
      if (used_[c]) continue;
      used_[c] = true;
      cur.push_back(c);
      const bool go_on = fill(p, c + 1);
      cur.pop_back();
      used_[c] = false;
      if (!go_on) return false;
    }
    return true;
  }

  bool walk_binary(std::size_t x) {
    query_.parts[0] = {x};
    query_.parts[1].clear();
    return walk_c2(x, 0, row_mask_, row_mask_);
  }

  // all_one: rows where every chosen C2 column is 1; all_zero likewise for 0.
  bool walk_c2(std::size_t x, std::size_t start, std::uint64_t all_one, std::uint64_t all_zero) {
    auto& c2 = query_.parts[1];
    const std::size_t w = parts_[1];
    if (c2.size() == w) {
      const std::uint64_t xv = values_[x];
      const std::uint64_t mask = ((~xv & all_one) | (xv & all_zero)) & row_mask_;
      return record(true, mask);
    }
    for (std::size_t c = start; c < m_.cols(); ++c) {
      if (c == x) continue;
      c2.push_back(c);
      const bool go_on = walk_c2(x, c + 1, all_one & values_[c], all_zero & ~values_[c]);
      c2.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  const CodeMatrix& m_;
  const std::vector<std::size_t>& parts_;
  bool collect_;
  std::vector<bool> used_;
  SeparationQuery query_;
  WorkerResult result_;
  bool binary_fast_ = false;
  std::vector<std::uint64_t> values_;
  std::uint64_t row_mask_ = 0;
};

}  // namespace

SeparationReport is_shf(const CodeMatrix& m, const ShfType& type, const VerifyOptions& opts) {
  SeparationReport report;
  report.row_counts.assign(m.rows(), 0);
  report.new_pairs.assign(m.rows(), 0);
  if (m.cols() < type.total()) {
    report.verdict = true;
    report.vacuous = true;
    report.has_stats = true;
    return report;
  }

  Count raw = 0;
  try {
    raw = query_count(m.cols(), type);
  } catch (const std::overflow_error&) {
    throw BudgetExceeded("query count overflows 64 bits");
  }
  if (raw > opts.query_budget)
    throw BudgetExceeded("query count " + std::to_string(raw) + " exceeds budget " + std::to_string(opts.query_budget));

  // Partition by the first column of C1; lexicographic order across chunks
  // follows chunk order, so the least witness is the first one reported.
  const unsigned workers = std::max(1U, std::min<unsigned>(opts.threads, static_cast<unsigned>(m.cols())));
  std::vector<std::vector<std::size_t>> chunks(workers);
  for (std::size_t c = 0; c < m.cols(); ++c) chunks[c * workers / m.cols()].push_back(c);

  std::vector<WorkerResult> results(workers);
  if (workers == 1) {
    results[0] = QueryWalker(m, type, opts.collect_stats).run(chunks[0]);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&, t] { results[t] = QueryWalker(m, type, opts.collect_stats).run(chunks[t]); });
  }

  for (const auto& res : results) {
    if (res.witness && !report.witness) report.witness = res.witness;
    report.total_queries += res.total;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      report.row_counts[r] += res.row_counts[r];
      report.new_pairs[r] += res.new_pairs[r];
    }
  }
  report.verdict = !report.witness.has_value();
  report.has_stats = opts.collect_stats;
  if (opts.collect_stats && report.total_queries != raw)
    throw std::logic_error("is_shf: enumerated " + std::to_string(report.total_queries) + " queries, expected " +
                           std::to_string(raw));
  if (!opts.collect_stats) {
    report.row_counts.clear();
    report.new_pairs.clear();
  }
  report.total_queries = raw;
  return report;
}

std::optional<FrameproofViolation> find_frameproof_violation(const CodeMatrix& m, std::size_t w) {
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
  std::vector<unsigned> allowed(m.rows());
  std::optional<FrameproofViolation> found;

  for (std::size_t size = 1; size <= w && size <= m.cols() && !found; ++size) {
    for_each_combination<std::size_t>(cols, size, [&](std::span<const std::size_t> coalition) {
      // desc(P): words whose every coordinate appears among P's codewords there.
      for (std::size_t r = 0; r < m.rows(); ++r) {
        allowed[r] = 0;
        for (std::size_t p : coalition) allowed[r] |= 1U << m.at(r, p);
      }
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (std::find(coalition.begin(), coalition.end(), c) != coalition.end()) continue;
        bool descendant = true;
        for (std::size_t r = 0; r < m.rows() && descendant; ++r) descendant = (allowed[r] >> m.at(r, c)) & 1U;
        if (descendant) {
          found = FrameproofViolation{{coalition.begin(), coalition.end()}, c};
          return false;
        }
      }
      return true;
    });
  }
  return found;
}

bool is_frameproof(const CodeMatrix& m, std::size_t w) { return !find_frameproof_violation(m, w).has_value(); }

Count count_pairs_row(std::size_t n, std::size_t w, std::size_t i) {
  if (i > n) throw std::invalid_argument("count_pairs_row: row type exceeds column count");
  // {x} on the 1 side with C2 among the zeros, plus {x} on the 0 side with C2
  // among the ones; the second term vanishes when i < w.
  return checked_add(checked_mul(i, binomial(n - i, w)), checked_mul(binomial(i, w), n - i));
}

Count common_pairs(std::size_t n, std::size_t w, std::size_t i, std::size_t j, std::size_t s) {
  if (s > std::min(i, j)) throw std::invalid_argument("common_pairs: overlap exceeds a row type");
  if (i + j - s > n) throw std::invalid_argument("common_pairs: supports do not fit in n columns");
  const std::size_t zeros = n - i - j + s;
  Count theta = checked_mul(s, binomial(zeros, w));
  theta = checked_add(theta, checked_mul(zeros, binomial(s, w)));
  theta = checked_add(theta, checked_mul(i - s, binomial(j - s, w)));
  theta = checked_add(theta, checked_mul(j - s, binomial(i - s, w)));
  return theta;
}

Count total_pairs(std::size_t n, std::size_t w) {
  if (n <= w) return 0;
  return checked_mul(n - w, binomial(n, w));
}

std::vector<Count> new_pairs_sequence(const CodeMatrix& m, std::size_t w) {
  if (!m.is_binary()) throw std::invalid_argument("new_pairs_sequence: matrix is not binary");
  VerifyOptions opts;
  opts.collect_stats = true;
  return is_shf(m, ShfType::one_vs(w), opts).new_pairs;
}

OverlapProfile overlap_profile(const CodeMatrix& m, std::size_t r1, std::size_t r2, std::size_t w) {
  OverlapProfile p;
  p.s = overlap(m, r1, r2);
  const std::size_t i = row_type(m, r1);
  const std::size_t j = row_type(m, r2);
  p.both_one = p.s;
  p.first_only = i - p.s;
  p.second_only = j - p.s;
  p.both_zero = m.cols() - i - j + p.s;
  p.theta = common_pairs(m.cols(), w, i, j, p.s);
  return p;
}

std::vector<RowProfile> row_profiles(const CodeMatrix& m, std::size_t w) {
  std::vector<RowProfile> out;
  out.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const std::size_t t = row_type(m, r);
    out.push_back({r, t, count_pairs_row(m.cols(), w, t)});
  }
  return out;
}

}  // namespace shf
