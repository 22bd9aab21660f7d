#include "shf/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "shf/combinatorics.hpp"
#include "shf/separation.hpp"

namespace shf {

namespace {

using Clock = std::chrono::steady_clock;
using Columns = std::vector<std::uint64_t>;

constexpr std::size_t kNoCut = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kCountingBoundMax = 64;
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating(auto&& fn) {
  try {
    return fn();
  } catch (const std::overflow_error&) {
    return kSaturated;
  }
}

enum class Mode { maximize, collect };

struct Problem {
  std::size_t N = 0;
  std::size_t w = 0;
  std::uint64_t full = 0;      // mask of N row bits
  std::uint64_t limit = 0;     // 2^N, one past the largest column value
  std::size_t cap = 0;         // depth at which maximize stops
  std::size_t target = 0;      // depth collected in collect mode
  Mode mode = Mode::maximize;
  Symmetry symmetry = Symmetry::rows;
  bool check_prefixes = false;
  std::size_t split_depth = 2;
  // pairs[k][i]: pairs separated by a weight-i row over k columns; total[k] = T(k, w).
  std::vector<std::vector<std::uint64_t>> pairs;
  std::vector<std::uint64_t> total;

  void build_tables() {
    const std::size_t kmax = std::min<std::size_t>(kCountingBoundMax, cap);
    pairs.assign(kmax + 1, {});
    total.assign(kmax + 1, 0);
    for (std::size_t k = 0; k <= kmax; ++k) {
      total[k] = saturating([&] { return total_pairs(k, w); });
      pairs[k].resize(k + 1);
      for (std::size_t i = 0; i <= k; ++i) pairs[k][i] = saturating([&] { return count_pairs_row(k, w, i); });
    }
  }
};

// Whether the {1,w} property survives appending column c to cols[0..k),
// given that cols[0..k) already has it. Only queries touching c are checked.
class IncrementalCheck {
 public:
  IncrementalCheck(const Problem& p) : full_(p.full), w_(p.w) {}

  bool extends(const std::uint64_t* cols, std::size_t k, std::uint64_t c) const {
    if (k < w_) return true;
    cols_ = cols;
    k_ = k;
    c_ = c;
    if (!singleton(0, 0, full_, full_)) return false;
    for (std::size_t x = 0; x < k; ++x) {
      x_ = x;
      if (!member(0, 0, c & full_, ~c & full_)) return false;
    }
    return true;
  }

 private:
  // ({c}, C2) with C2 drawn from the existing columns. The separating-row
  // mask only shrinks as C2 grows, so an empty mask on a partial C2 already
  // proves a failing completion exists.
  bool singleton(std::size_t start, std::size_t depth, std::uint64_t all_one, std::uint64_t all_zero) const {
    if ((((~c_) & all_one) | (c_ & all_zero)) == 0) return false;
    if (depth == w_) return true;
    for (std::size_t i = start; i + (w_ - depth) <= k_; ++i)
      if (!singleton(i + 1, depth + 1, all_one & cols_[i], all_zero & ~cols_[i])) return false;
    return true;
  }

  // ({x}, C2) with c in C2 and the rest drawn from the existing columns minus x.
  bool member(std::size_t start, std::size_t depth, std::uint64_t all_one, std::uint64_t all_zero) const {
    const std::uint64_t xv = cols_[x_];
    if ((((~xv) & all_one) | (xv & all_zero)) == 0) return false;
    if (depth + 1 == w_) return true;
    for (std::size_t i = start; i < k_; ++i) {
      if (i == x_) continue;
      if (!member(i + 1, depth + 1, all_one & cols_[i], all_zero & ~cols_[i])) return false;
    }
    return true;
  }

  std::uint64_t full_;
  std::size_t w_;
  mutable const std::uint64_t* cols_ = nullptr;
  mutable std::size_t k_ = 0;
  mutable std::size_t x_ = 0;
  mutable std::uint64_t c_ = 0;
};

struct Shared {
  std::uint64_t node_budget = 0;  // 0: unlimited
  bool deterministic = true;
  std::atomic<std::uint64_t> global_nodes{0};
  std::atomic<bool> out_of_time{false};
  std::atomic<std::size_t> cut{kNoCut};
  std::optional<Clock::time_point> deadline;
};

struct TaskResult {
  std::size_t best = 0;
  Columns witness;
  std::vector<Columns> solutions;
  std::uint64_t nodes = 0;
  bool reached_cap = false;
  bool aborted = false;  // budget or time
  bool skipped = false;  // cancelled because an earlier task settled the answer
};

class Walker {
 public:
  Walker(const Problem& p, Shared& shared, std::uint64_t local_limit)
      : p_(p), shared_(shared), check_(p), local_limit_(local_limit), weights_(p.N, 0) {}

  // Prefix phase: walk from the root; nodes at split depth become tasks.
  TaskResult run_prefix(std::vector<Columns>& tasks) {
    tasks_ = &tasks;
    cols_.clear();
    descend(std::numeric_limits<std::size_t>::max());
    tasks_ = nullptr;
    return std::move(result_);
  }

  TaskResult run_task(const Columns& prefix, std::size_t index) {
    index_ = index;
    cols_.clear();
    std::fill(weights_.begin(), weights_.end(), 0);
    for (std::uint64_t v : prefix) push(v);
    descend(index);
    return std::move(result_);
  }

 private:
  void push(std::uint64_t v) {
    cols_.push_back(v);
    for (std::size_t r = 0; r < p_.N; ++r) weights_[r] += (v >> (p_.N - 1 - r)) & 1U;
  }
  void pop() {
    const std::uint64_t v = cols_.back();
    cols_.pop_back();
    for (std::size_t r = 0; r < p_.N; ++r) weights_[r] -= (v >> (p_.N - 1 - r)) & 1U;
  }

  bool stop() const { return stopping_; }

  bool charge_node() {
    ++result_.nodes;
    if (shared_.deterministic) {
      if (local_limit_ != 0 && result_.nodes > local_limit_) return abort();
    } else if (shared_.node_budget != 0) {
      if (shared_.global_nodes.fetch_add(1, std::memory_order_relaxed) + 1 > shared_.node_budget) return abort();
    }
    if ((result_.nodes & 1023U) == 0) {
      if (shared_.deadline && Clock::now() >= *shared_.deadline) shared_.out_of_time.store(true);
      if (shared_.out_of_time.load()) return abort();
      if (index_ != kNoCut && shared_.cut.load() < index_) {
        result_.skipped = true;
        stopping_ = true;
        return false;
      }
    }
    return true;
  }

  bool abort() {
    result_.aborted = true;
    stopping_ = true;
    return false;
  }

  bool counting_bound_ok() const {
    const std::size_t k = cols_.size();
    if (k <= p_.w || k >= p_.pairs.size() || p_.total[k] == kSaturated) return true;
    std::uint64_t sum = 0;
    for (std::size_t r = 0; r < p_.N; ++r) {
      const std::uint64_t v = p_.pairs[k][weights_[r]];
      if (v == kSaturated || sum > kSaturated - v) return true;
      sum += v;
      if (sum >= p_.total[k]) return true;
    }
    return false;
  }

  // Visit the node formed by the current columns.
  void descend(std::size_t task_index) {
    const std::size_t depth = cols_.size();
    const bool in_prefix = tasks_ != nullptr;
    if (in_prefix && depth == p_.split_depth && depth < p_.cap &&
        !(p_.mode == Mode::collect && depth == p_.target)) {
      tasks_->push_back(cols_);
      return;
    }
    if (!charge_node()) return;

    if (p_.check_prefixes && depth > 0) {
      const auto m = CodeMatrix::from_column_values(cols_, p_.N);
      VerifyOptions opts;
      opts.collect_stats = false;
      if (!is_shf(m, ShfType::one_vs(p_.w), opts).verdict)
        throw std::logic_error("search accepted a partial matrix that is not an SHF");
    }

    if (depth > result_.best) {
      result_.best = depth;
      result_.witness = cols_;
    }
    if (p_.mode == Mode::collect && depth == p_.target) {
      result_.solutions.push_back(cols_);
      return;
    }
    if (p_.mode == Mode::maximize && depth == p_.cap) {
      result_.reached_cap = true;
      stopping_ = true;
      return;
    }

    std::uint64_t first = depth == 0 ? 0 : cols_.back() + 1;
    std::size_t min_weight = 0;
    if (p_.symmetry == Symmetry::rows) {
      if (depth == 0) {
        try_child(0, task_index);
        return;
      }
      if (depth == 1) {
        for (std::size_t b = 1; b <= p_.N && !stop(); ++b) try_child((std::uint64_t{1} << b) - 1, task_index);
        return;
      }
      min_weight = static_cast<std::size_t>(std::popcount(cols_[1]));
    }

    if (p_.mode == Mode::maximize && depth + (p_.limit - first) <= result_.best) return;
    if (p_.mode == Mode::collect && depth + (p_.limit - first) < p_.target) return;

    for (std::uint64_t v = first; v < p_.limit && !stop(); ++v) {
      if (static_cast<std::size_t>(std::popcount(v)) < min_weight) continue;
      try_child(v, task_index);
    }
  }

  void try_child(std::uint64_t v, std::size_t task_index) {
    if (!check_.extends(cols_.data(), cols_.size(), v)) return;
    push(v);
    if (counting_bound_ok()) descend(task_index);
    pop();
  }

  const Problem& p_;
  Shared& shared_;
  IncrementalCheck check_;
  std::uint64_t local_limit_;
  std::vector<std::size_t> weights_;
  Columns cols_;
  TaskResult result_;
  std::vector<Columns>* tasks_ = nullptr;
  std::size_t index_ = kNoCut;
  bool stopping_ = false;
};

struct Outcome {
  std::size_t best = 0;
  Columns witness;
  std::vector<Columns> solutions;
  std::uint64_t nodes = 0;
  bool complete = false;
  bool reached_cap = false;
  std::chrono::duration<double> elapsed{0};
};

Outcome run_problem(const Problem& p, const SearchConfig& cfg) {
  const auto start = Clock::now();
  Shared shared;
  shared.node_budget = cfg.node_budget;
  shared.deterministic = cfg.deterministic;
  if (cfg.time_budget.count() > 0) shared.deadline = start + cfg.time_budget;

  std::vector<Columns> tasks;
  Walker prefix_walker(p, shared, cfg.node_budget);
  TaskResult prefix = prefix_walker.run_prefix(tasks);

  Outcome out;
  out.best = prefix.best;
  out.witness = std::move(prefix.witness);
  out.solutions = std::move(prefix.solutions);
  out.nodes = prefix.nodes;
  if (prefix.aborted) {
    out.elapsed = Clock::now() - start;
    return out;
  }
  if (prefix.reached_cap) {
    out.reached_cap = true;
    out.complete = true;
    out.elapsed = Clock::now() - start;
    return out;
  }

  std::uint64_t task_limit = 0;
  if (cfg.node_budget != 0) task_limit = cfg.node_budget > prefix.nodes ? cfg.node_budget - prefix.nodes : 1;
  if (!cfg.deterministic) shared.global_nodes.store(prefix.nodes);

  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      if (shared.cut.load() < t) {
        results[t].skipped = true;
        continue;
      }
      if (shared.out_of_time.load()) {
        results[t].aborted = true;
        std::size_t cur = shared.cut.load();
        while (t < cur && !shared.cut.compare_exchange_weak(cur, t)) {
        }
        continue;
      }
      Walker walker(p, shared, task_limit);
      results[t] = walker.run_task(tasks[t], t);
      if (results[t].reached_cap || results[t].aborted) {
        std::size_t cur = shared.cut.load();
        while (t < cur && !shared.cut.compare_exchange_weak(cur, t)) {
        }
      }
    }
  };
  const unsigned threads = std::max(1U, cfg.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
  }

  out.complete = true;
  for (auto& res : results) {
    if (res.skipped) throw std::logic_error("search merge reached a cancelled task");
    out.nodes += res.nodes;
    if (res.best > out.best) {
      out.best = res.best;
      out.witness = std::move(res.witness);
    }
    for (auto& s : res.solutions) out.solutions.push_back(std::move(s));
    if (res.aborted) {
      out.complete = false;
      break;
    }
    if (res.reached_cap) {
      out.reached_cap = true;
      break;
    }
    if (cfg.deterministic && cfg.node_budget != 0 && out.nodes > cfg.node_budget) {
      out.complete = false;
      break;
    }
  }
  out.elapsed = Clock::now() - start;
  return out;
}

Problem make_problem(const SearchConfig& cfg) {
  if (cfg.q != 2) throw std::invalid_argument("search supports binary alphabets only");
  if (cfg.rows == 0 || cfg.rows > 20) throw std::invalid_argument("search needs 1 <= N <= 20");
  if (cfg.w == 0) throw std::invalid_argument("search needs w >= 1");
  Problem p;
  p.N = cfg.rows;
  p.w = cfg.w;
  p.full = (std::uint64_t{1} << p.N) - 1;
  p.limit = std::uint64_t{1} << p.N;
  p.symmetry = cfg.symmetry;
  p.check_prefixes = cfg.check_prefixes;
  return p;
}

void require_shf(const CodeMatrix& m, std::size_t w, const char* what) {
  VerifyOptions opts;
  opts.collect_stats = false;
  if (!is_shf(m, ShfType::one_vs(w), opts).verdict) throw std::logic_error(std::string(what) + " failed re-verification");
}

}  // namespace

SearchResult max_code_search(const SearchConfig& cfg) {
  Problem p = make_problem(cfg);
  const std::size_t space = static_cast<std::size_t>(p.limit);
  p.cap = cfg.max_columns == 0 ? space : std::min(cfg.max_columns, space);
  p.mode = Mode::maximize;
  p.split_depth = p.symmetry == Symmetry::rows ? 3 : 2;
  p.build_tables();

  Outcome o = run_problem(p, cfg);
  SearchResult res;
  res.best_n = o.best;
  res.nodes = o.nodes;
  res.elapsed = o.elapsed;
  // Hitting a caller-imposed cap below 2^N does not settle the maximum.
  res.complete = o.reached_cap ? p.cap == space : o.complete;
  if (!o.witness.empty()) {
    res.witness = CodeMatrix::from_column_values(o.witness, p.N);
    require_shf(res.witness, p.w, "search witness");
  }
  return res;
}

SquareEnumeration enumerate_square_shf(const SearchConfig& cfg) {
  Problem p = make_problem(cfg);
  p.symmetry = Symmetry::columns;
  p.mode = Mode::collect;
  p.target = p.N;
  p.cap = p.N;
  p.split_depth = 2;
  p.build_tables();

  Outcome o = run_problem(p, cfg);
  SquareEnumeration out;
  out.complete = o.complete;
  out.nodes = o.nodes;
  out.elapsed = o.elapsed;
  for (const Columns& cols : o.solutions) {
    SquareSolution s{CodeMatrix::from_column_values(cols, p.N), false};
    require_shf(s.matrix, p.w, "square solution");
    s.permutation_in_standard_form = is_permutation_matrix(to_standard_form(s.matrix));
    out.all_permutation = out.all_permutation && s.permutation_in_standard_form;
    out.solutions.push_back(std::move(s));
  }
  return out;
}

SquareEnumeration enumerate_square_shf(std::size_t N, std::size_t w, std::uint64_t node_budget) {
  SearchConfig cfg;
  cfg.rows = N;
  cfg.w = w;
  cfg.node_budget = node_budget;
  return enumerate_square_shf(cfg);
}

bool naive_enumerate(std::size_t N, std::size_t w, std::size_t n) {
  if (N == 0 || N > 20) throw std::invalid_argument("naive_enumerate needs 1 <= N <= 20");
  const std::uint64_t space = std::uint64_t{1} << N;
  if (n == 0) return true;
  if (n > space) return false;
  const Count subsets = saturating([&] { return binomial(space, n); });
  if (subsets > 1'000'000'000ULL) throw BudgetExceeded("naive_enumerate: more than 1e9 column subsets");

  std::vector<std::uint64_t> pool(space);
  for (std::uint64_t v = 0; v < space; ++v) pool[v] = v;
  const ShfType type = ShfType::one_vs(w);
  VerifyOptions opts;
  opts.collect_stats = false;
  bool found = false;
  for_each_combination<std::uint64_t>(pool, n, [&](std::span<const std::uint64_t> cols) {
    const auto m = CodeMatrix::from_column_values(cols, N);
    found = is_shf(m, type, opts).verdict;
    return !found;
  });
  return found;
}

OpenProblemReport open_problem_scan(std::size_t w, std::size_t N_first, std::size_t N_last, const ScanBudgets& budgets) {
  OpenProblemReport report;
  report.w = w;
  for (std::size_t N = N_first; N <= N_last; ++N) {
    OpenProblemCell cell;
    cell.N = N;
    SearchConfig cfg;
    cfg.rows = N;
    cfg.w = w;
    cfg.node_budget = budgets.node_budget;
    cfg.time_budget = budgets.time_budget;
    cfg.threads = budgets.threads;
    cfg.max_columns = N + 1;  // n > N is the question; stop as soon as it is answered
    cell.max_search = max_code_search(cfg);
    cell.exceeds = cell.max_search.best_n > N;
    if (!cell.exceeds && !cell.max_search.complete) report.complete = false;
    if (cell.exceeds && !report.first_exceeding) report.first_exceeding = N;

    if (N <= budgets.max_square_N) {
      SearchConfig sq = cfg;
      sq.max_columns = 0;
      cell.square = enumerate_square_shf(sq);
      cell.has_non_permutation_square = !cell.square->all_permutation;
      if (!cell.square->complete) report.complete = false;
      if (cell.has_non_permutation_square && !report.first_non_permutation) report.first_non_permutation = N;
    } else {
      report.complete = false;
    }
    report.cells.push_back(std::move(cell));
  }
  return report;
}

}  // namespace shf
