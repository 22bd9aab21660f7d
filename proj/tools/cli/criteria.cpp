#include "criteria.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "oracles.hpp"
#include "shf/analysis.hpp"
#include "shf/constructions.hpp"
#include "shf/search.hpp"
#include "shf/separation.hpp"

namespace shf::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

// Accumulates failures; a criterion passes when none were recorded.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) {
      ++failed_;
      if (failures_.size() < 5) failures_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }
  void mark_incomplete(const std::string& what) {
    incomplete_ = true;
    notes_.push_back("incomplete: " + what);
  }

  bool ok() const { return failed_ == 0; }
  bool incomplete() const { return incomplete_; }

  std::string summary() const {
    std::ostringstream s;
    s << (total_ - failed_) << "/" << total_ << " checks";
    for (const auto& f : failures_) s << "; FAILED " << f;
    for (const auto& n : notes_) s << "; " << n;
    return s.str();
  }

 private:
  std::size_t total_ = 0;
  std::size_t failed_ = 0;
  bool incomplete_ = false;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string args(std::initializer_list<std::size_t> xs) {
  std::string s = "(";
  bool first = true;
  for (auto x : xs) {
    s += (first ? "" : ",") + std::to_string(x);
    first = false;
  }
  return s + ")";
}

bool shf_holds(const CodeMatrix& m, std::size_t w) { return is_shf(m, ShfType::one_vs(w)).verdict; }

SearchConfig search_config(std::size_t N, std::size_t w) {
  SearchConfig cfg;
  cfg.rows = N;
  cfg.w = w;
  cfg.deterministic = true;
  return cfg;
}

// 1
void counting_formula(Checks& c, Level) {
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t w : {2, 3, 4})
      for (std::size_t i = 0; i <= n; ++i)
        c.expect(count_pairs_row(n, w, i) == oracle::row_pairs(oracle::prefix_row(n, i), w),
                 "count_pairs_row" + args({n, w, i}));
}

// 2
void overlap_formula(Checks& c, Level) {
  for (std::size_t n = 1; n <= 9; ++n)
    for (std::size_t w : {2, 3, 4})
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j)
          for (std::size_t s = 0; s <= std::min(i, j); ++s) {
            if (i + j - s > n) continue;
            const auto a = oracle::prefix_row(n, i);
            const auto b = oracle::overlap_partner(n, i, j, s);
            c.expect(common_pairs(n, w, i, j, s) == oracle::both_pairs(a, b, w), "common_pairs" + args({n, w, i, j, s}));
          }
}

// 3
void published_constants(Checks& c, Level) {
  const std::pair<std::size_t, Count> totals[] = {{5, 20}, {6, 60}, {7, 140}, {8, 280}, {9, 504}};
  for (auto [n, t] : totals) c.expect(total_pairs(n, 3) == t, "T" + args({n, 3}));
  const Count n8[] = {35, 40, 35, 32};
  const Count n9[] = {56, 70, 66, 60};
  for (std::size_t i = 1; i <= 4; ++i) {
    c.expect(count_pairs_row(8, 3, i) == n8[i - 1], "count_pairs_row" + args({8, 3, i}));
    c.expect(count_pairs_row(9, 3, i) == n9[i - 1], "count_pairs_row" + args({9, 3, i}));
  }
  const Count overlap_table[] = {32, 6, 2, 16};
  for (std::size_t s = 0; s <= 3; ++s)
    c.expect(common_pairs(9, 3, 4, 4, s) == overlap_table[s], "common_pairs" + args({9, 3, 4, 4, s}));
}

// 4
void frameproof_equivalence(Checks& c, Level) {
  std::size_t agree_true = 0;
  for (std::uint32_t bits = 0; bits < (1U << 12); ++bits) {
    std::vector<std::vector<Symbol>> rows(3, std::vector<Symbol>(4));
    for (std::size_t k = 0; k < 12; ++k) rows[k / 4][k % 4] = static_cast<Symbol>((bits >> k) & 1U);
    const CodeMatrix m(rows, 2);
    for (std::size_t w : {2, 3}) {
      const bool fp = is_frameproof(m, w);
      c.expect(fp == shf_holds(m, w), "3x4 matrix " + std::to_string(bits) + " w=" + std::to_string(w));
      agree_true += fp;
    }
  }
  std::mt19937_64 rng(20240229);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<std::vector<Symbol>> rows(5, std::vector<Symbol>(6));
    for (auto& row : rows)
      for (auto& x : row) x = coin(rng) ? 1 : 0;
    const CodeMatrix m(rows, 2);
    for (std::size_t w : {2, 3}) {
      const bool fp = is_frameproof(m, w);
      c.expect(fp == shf_holds(m, w), "random 5x6 trial " + std::to_string(trial) + " w=" + std::to_string(w));
      agree_true += fp;
    }
  }
  c.note(std::to_string(agree_true) + " frameproof instances");
}

// 5
void constructions(Checks& c, Level) {
  for (std::size_t N = 1; N <= 8; ++N)
    for (std::size_t w = 1; w + 1 <= N; ++w) c.expect(shf_holds(permutation_code(N), w), "permutation" + args({N, w}));
  for (std::size_t N = 1; N <= 6; ++N)
    for (unsigned q = 2; q <= 4; ++q) {
      const CodeMatrix m = weight_one_code(N, q);
      for (std::size_t w = 1; w <= 5; ++w) c.expect(shf_holds(m, w), "weight_one" + args({N, q, w}));
    }
  for (std::size_t N = 3; N <= 8; ++N) c.expect(shf_holds(identity_plus_ones(N), 2), "identity_plus_ones" + args({N}));
  const CodeMatrix a = non_perm_4x4();
  c.expect(shf_holds(a, 2), "non_perm_4x4 {1,2}");
  c.expect(!is_permutation_matrix(a), "non_perm_4x4 is not a permutation matrix");
  for (std::size_t k = 0; k <= 4; ++k) {
    const CodeMatrix b = block_extend(a, k);
    c.expect(shf_holds(b, 2), "block_extend" + args({k}));
    c.expect(!is_permutation_matrix(to_standard_form(b)), "block_extend non-permutation" + args({k}));
  }
}

// 6
void w3_bound_and_uniqueness(Checks& c, Level level) {
  for (std::size_t N = 4; N <= 7; ++N) {
    const SearchResult r = max_code_search(search_config(N, 3));
    c.expect(r.complete && r.best_n == N, "max_code_search" + args({N, 3}) + " best " + std::to_string(r.best_n));
  }
  for (std::size_t N = 4; N <= 6; ++N) {
    const SquareEnumeration e = enumerate_square_shf(N, 3);
    c.expect(e.complete && !e.solutions.empty() && e.all_permutation, "enumerate_square_shf" + args({N, 3}));
  }
  if (level != Level::full) return;

  // Beyond desk scale: run under budgets and report completeness honestly.
  {
    SearchConfig cfg = search_config(7, 3);
    cfg.time_budget = std::chrono::minutes(30);
    const SquareEnumeration e = enumerate_square_shf(cfg);
    if (!e.complete) {
      c.mark_incomplete("square enumeration N=7 (" + std::to_string(e.nodes) + " nodes)");
    } else {
      c.expect(e.all_permutation && !e.solutions.empty(), "enumerate_square_shf(7,3)");
      c.note("N=7 square enumeration complete, " + std::to_string(e.solutions.size()) + " solutions");
    }
  }
  {
    SearchConfig cfg = search_config(8, 3);
    cfg.time_budget = std::chrono::minutes(60);
    const SearchResult r = max_code_search(cfg);
    if (r.best_n > 8) {
      c.expect(false, "max_code_search(8,3) found n=" + std::to_string(r.best_n));
    } else if (!r.complete) {
      c.mark_incomplete("max_code_search(8,3) best so far " + std::to_string(r.best_n) + " after " +
                        std::to_string(r.nodes) + " nodes");
    } else {
      c.expect(r.best_n == 8, "max_code_search(8,3)");
      c.note("N=8 search complete, n=8");
    }
  }
}

// 7
void w2_sanity(Checks& c, Level) {
  c.expect(naive_enumerate(3, 2, 4), "naive_enumerate(3,2,4)");
  const SearchResult r = max_code_search(search_config(3, 2));
  c.expect(r.complete && r.best_n >= 4, "max_code_search(3,2) best " + std::to_string(r.best_n));
  const SquareEnumeration four = enumerate_square_shf(4, 2);
  c.expect(four.complete && !four.all_permutation, "enumerate_square_shf(4,2) has a non-permutation solution");
  bool has_displayed = false;
  const CodeMatrix a = non_perm_4x4();
  std::vector<std::uint64_t> want;
  for (std::size_t col = 0; col < 4; ++col) want.push_back(a.column_value(col));
  std::sort(want.begin(), want.end());
  for (const auto& s : four.solutions) {
    std::vector<std::uint64_t> got;
    for (std::size_t col = 0; col < 4; ++col) got.push_back(s.matrix.column_value(col));
    has_displayed = has_displayed || got == want;
  }
  c.expect(has_displayed, "enumerate_square_shf(4,2) contains the 1100/0110/1010/0001 matrix");
  const SquareEnumeration three = enumerate_square_shf(3, 2);
  c.expect(three.complete && !three.solutions.empty() && three.all_permutation,
           "enumerate_square_shf(3,2) only permutation solutions");
}

// 8
void analysis_inequalities(Checks& c, Level) {
  for (std::size_t w = 1; w <= 12; ++w)
    for (std::size_t n = w + 1; n <= 3 * w; ++n)
      c.expect(binomial_chain_holds(n, w) == (n <= 2 * w), "binomial_chain" + args({n, w}));
  for (std::size_t w = 4; w <= 16; ++w)
    for (std::size_t N = 2 * w + 2; N <= 3 * w; ++N) {
      const Rational alpha = average_pairs_per_row(N, w, N);
      c.expect(alpha == Rational(binomial(N - 1, w), 1), "alpha = C(N-1,w)" + args({N, w}));
      for (std::size_t i = w + 1; i <= N / 2; ++i)
        c.expect(alpha > count_pairs_row(N, w, i), "alpha > beta" + args({w, N, i}));
    }
}

// 9
void search_cross_validation(Checks& c, Level) {
  for (std::size_t N = 1; N <= 4; ++N)
    for (std::size_t w = 1; w <= 3; ++w) {
      for (Symmetry sym : {Symmetry::rows, Symmetry::columns}) {
        SearchConfig cfg = search_config(N, w);
        cfg.symmetry = sym;
        const SearchResult r = max_code_search(cfg);
        c.expect(r.complete, "search complete" + args({N, w}));
        for (std::size_t n = 1; n <= 6; ++n)
          c.expect((r.best_n >= n) == naive_enumerate(N, w, n),
                   std::string(sym == Symmetry::rows ? "rows" : "columns") + " vs naive" + args({N, w, n}));
      }
    }
}

// 10
void determinism(Checks& c, Level) {
  std::vector<std::vector<std::string>> workloads;
  for (std::size_t N = 4; N <= 7; ++N) workloads.push_back({"search", std::to_string(N), "3"});
  for (std::size_t N = 4; N <= 6; ++N) workloads.push_back({"search", std::to_string(N), "3", "--enumerate-square"});
  workloads.push_back({"search", "3", "2"});
  workloads.push_back({"search", "4", "2", "--enumerate-square"});
  workloads.push_back({"search", "3", "2", "--enumerate-square"});

  for (const auto& base : workloads) {
    std::string reference;
    std::string label;
    for (const auto& x : base) label += x + " ";
    for (const char* threads : {"1", "2", "8"}) {
      auto argv = base;
      argv.insert(argv.end(), {"--deterministic", "--json", "--threads", threads});
      std::ostringstream out, err;
      const int code = cli::run(argv, out, err);
      c.expect(code == 0, label + "exit code");
      if (std::string(threads) == "1")
        reference = out.str();
      else
        c.expect(out.str() == reference, label + "threads=" + threads + " differs from threads=1");
    }
  }
}

struct Spec {
  const char* title;
  double limit_seconds;
  void (*fn)(Checks&, Level);
};

const Spec kCriteria[kCriterionCount] = {
    {"pair-count formula matches brute force (n<=10, w=2..4)", 10, counting_formula},
    {"common-pair formula matches brute force (n<=9, w=2..4)", 30, overlap_formula},
    {"published constants: T, per-row counts, overlap table", 0, published_constants},
    {"frameproof <=> SHF{1,w} (all 3x4, 10000 random 5x6)", 60, frameproof_equivalence},
    {"constructions verify for their advertised types", 30, constructions},
    {"w=3: n<=N and square solutions are permutations", 600, w3_bound_and_uniqueness},
    {"w=2: N+1 columns, non-permutation square solutions", 60, w2_sanity},
    {"binomial chain and average-vs-heavy-row inequalities", 5, analysis_inequalities},
    {"search agrees with naive enumeration (N<=4, w<=3, n<=6)", 60, search_cross_validation},
    {"deterministic search JSON identical for 1, 2, 8 threads", 0, determinism},
};

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "PASS";
    case Status::fail:
      return "FAIL";
    case Status::incomplete:
      return "INCOMPLETE";
  }
  return "?";
}

CriterionResult run_criterion(int id, Level level) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id out of range");
  const Spec& spec = kCriteria[id - 1];
  CriterionResult res;
  res.id = id;
  res.title = spec.title;
  res.limit_seconds = spec.limit_seconds;
  // The full level adds long budgeted runs to criterion 6; its limit covers the quick part only.
  const bool timed = spec.limit_seconds > 0 && !(level == Level::full && id == 6);

  Checks checks;
  const auto start = Clock::now();
  try {
    spec.fn(checks, level);
  } catch (const std::exception& e) {
    checks.expect(false, std::string("exception: ") + e.what());
  }
  res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (timed && res.seconds > spec.limit_seconds)
    checks.expect(false, "took " + std::to_string(res.seconds) + " s, limit " + std::to_string(spec.limit_seconds) + " s");

  res.status = !checks.ok() ? Status::fail : checks.incomplete() ? Status::incomplete : Status::pass;
  res.detail = checks.summary();
  return res;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream s;
  s << "[" << std::setw(10) << std::left << status_name(r.status) << std::right << "] " << std::setw(2) << r.id
    << ". " << r.title << " (" << std::fixed << std::setprecision(2) << r.seconds << " s";
  if (r.limit_seconds > 0) s << " / limit " << std::setprecision(0) << r.limit_seconds << " s";
  s << "): " << r.detail;
  return s.str();
}

std::vector<CriterionResult> run_all(Level level, std::ostream* log) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    out.push_back(run_criterion(id, level));
    if (log) *log << format_line(out.back()) << std::endl;
  }
  return out;
}

}  // namespace shf::acceptance
