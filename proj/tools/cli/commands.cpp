#include "commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "criteria.hpp"
#include "json.hpp"
#include "shf/analysis.hpp"
#include "shf/constructions.hpp"
#include "shf/matrix.hpp"
#include "shf/search.hpp"
#include "shf/separation.hpp"

namespace shf::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CodeMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_matrix(buf.str());
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Json rows_json(const CodeMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row_string(r));
  return rows;
}

CodeMatrix column_submatrix(const CodeMatrix& m, const std::vector<std::size_t>& cols) {
  std::vector<std::vector<Symbol>> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c : cols) rows[r].push_back(m.at(r, c));
  return CodeMatrix(std::move(rows), m.alphabet());
}

std::string set_string(const std::vector<std::size_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Json envelope(const std::string& command, Json params) {
  Json j;
  j["command"] = command;
  j["params"] = std::move(params);
  j["verdict"] = nullptr;
  return j;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string file;
  std::string type;
  std::size_t frameproof = 0;
  bool json = false;
  unsigned threads = 1;
  std::uint64_t budget = 100'000'000;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const CodeMatrix m = load_matrix(a.file);
  Json params;
  params["file"] = a.file;
  params["rows"] = m.rows();
  params["cols"] = m.cols();
  params["q"] = m.alphabet();

  if (a.type.empty() == (a.frameproof == 0)) throw UsageError("verify needs exactly one of --type or --frameproof");

  if (a.frameproof != 0) {
    params["frameproof"] = a.frameproof;
    Json j = envelope("verify", params);
    const auto violation = find_frameproof_violation(m, a.frameproof);
    j["verdict"] = !violation.has_value();
    Json stats;
    if (violation) {
      std::vector<std::size_t> cols = violation->coalition;
      cols.push_back(violation->forged);
      j["witness"] = rows_json(column_submatrix(m, cols));
      stats["coalition"] = violation->coalition;
      stats["forged"] = violation->forged;
    }
    j["stats"] = stats;
    j["complete"] = true;
    if (a.json) {
      print_json(out, j);
    } else {
      out << "matrix " << m.rows() << "x" << m.cols() << " q=" << m.alphabet() << '\n';
      if (!violation) {
        out << a.frameproof << "-frameproof: yes\n";
      } else {
        out << a.frameproof << "-frameproof: no; coalition " << set_string(violation->coalition)
            << " produces codeword " << violation->forged << '\n';
        for (const auto& row : j["witness"]) out << "  " << row.get<std::string>() << '\n';
      }
    }
    return violation ? kPropertyFails : kOk;
  }

  ShfType type = [&] {
    try {
      return ShfType::parse(a.type);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  params["type"] = a.type;
  VerifyOptions opts;
  opts.threads = a.threads;
  opts.query_budget = a.budget;
  const SeparationReport rep = is_shf(m, type, opts);

  Json j = envelope("verify", params);
  j["verdict"] = rep.verdict;
  Json stats;
  stats["T"] = rep.total_queries;
  stats["vacuous"] = rep.vacuous;
  stats["row_counts"] = rep.row_counts;
  stats["mu"] = rep.new_pairs;
  if (rep.witness) {
    Json parts = Json::array();
    std::vector<std::size_t> cols;
    for (const auto& part : rep.witness->parts) {
      parts.push_back(part);
      cols.insert(cols.end(), part.begin(), part.end());
    }
    stats["failing_query"] = parts;
    j["witness"] = rows_json(column_submatrix(m, cols));
  }
  j["stats"] = stats;
  j["complete"] = true;

  if (a.json) {
    print_json(out, j);
  } else {
    out << "matrix " << m.rows() << "x" << m.cols() << " q=" << m.alphabet() << '\n';
    out << "type " << type.to_string() << ": " << (rep.verdict ? "SHF" : "not an SHF");
    if (rep.vacuous) out << " (vacuous: fewer columns than the type needs)";
    out << "; " << rep.total_queries << " queries\n";
    if (rep.witness) {
      out << "unseparated:";
      for (const auto& part : rep.witness->parts) out << ' ' << set_string(part);
      out << '\n';
      for (const auto& row : j["witness"]) out << "  " << row.get<std::string>() << '\n';
    }
  }
  return rep.verdict ? kOk : kPropertyFails;
}

// ----------------------------------------------------------------- count

struct CountArgs {
  std::size_t n = 0;
  std::size_t w = 0;
  std::optional<std::size_t> row_type;
  std::vector<std::size_t> overlap;
  std::string matrix;
  bool chain = false;
  bool json = false;
};

int cmd_count(const CountArgs& a, std::ostream& out) {
  Json params;
  params["n"] = a.n;
  params["w"] = a.w;
  Json stats;
  stats["T"] = total_pairs(a.n, a.w);
  std::ostringstream text;
  text << "T = " << total_pairs(a.n, a.w) << '\n';
  std::optional<bool> verdict;

  if (a.row_type) {
    if (*a.row_type > a.n) throw UsageError("--row-type exceeds n");
    params["row_type"] = *a.row_type;
    const Count c = count_pairs_row(a.n, a.w, *a.row_type);
    stats["row_pairs"] = c;
    text << "type " << *a.row_type << " row separates " << c << '\n';
  }
  if (!a.overlap.empty()) {
    if (a.overlap.size() != 3) throw UsageError("--overlap takes i j s");
    const std::size_t i = a.overlap[0], jj = a.overlap[1], s = a.overlap[2];
    params["overlap"] = a.overlap;
    Count theta = 0;
    try {
      theta = common_pairs(a.n, a.w, i, jj, s);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    stats["theta"] = theta;
    text << "rows of types " << i << " and " << jj << " with overlap " << s << " share " << theta << '\n';
  }
  if (a.chain) {
    if (a.w + 1 > a.n) throw UsageError("--chain needs w + 1 <= n");
    const bool holds = binomial_chain_holds(a.n, a.w);
    stats["binomial_chain"] = holds;
    text << "binomial chain " << (holds ? "holds" : "fails") << '\n';
  }
  if (!a.matrix.empty()) {
    const CodeMatrix m = load_matrix(a.matrix);
    if (!m.is_binary()) throw UsageError("--matrix must be binary");
    if (m.cols() != a.n) throw UsageError("matrix has " + std::to_string(m.cols()) + " columns, n = " + std::to_string(a.n));
    params["matrix"] = a.matrix;
    const MatrixDiagnostics d = diagnose(m, a.w);
    stats["row_types"] = d.row_types;
    stats["row_pairs"] = d.row_pairs;
    stats["row_pairs_sum"] = d.row_pairs_sum;
    stats["alpha"] = d.alpha.to_string();
    Json beta = Json::object();
    for (const auto& [type, pairs] : d.beta) beta[std::to_string(type)] = pairs;
    stats["beta"] = beta;
    stats["mu"] = d.mu;
    stats["uncovered"] = d.uncovered;
    stats["constant_rows"] = d.constant_rows;
    verdict = d.uncovered == 0;
    text << "row types:";
    for (auto t : d.row_types) text << ' ' << t;
    text << "\nrow pairs:";
    for (auto c : d.row_pairs) text << ' ' << c;
    text << "\nsum of row pairs = " << d.row_pairs_sum << "\nalpha = " << d.alpha.to_string() << "\nmu:";
    for (auto c : d.mu) text << ' ' << c;
    text << "\nuncovered = " << d.uncovered << '\n';
    for (auto r : d.constant_rows) text << "row " << r << " is constant and separates nothing\n";
  }

  if (a.json) {
    Json j = envelope("count", params);
    if (verdict) j["verdict"] = *verdict;
    j["stats"] = stats;
    j["complete"] = true;
    print_json(out, j);
  } else {
    out << text.str();
  }
  return kOk;
}

// ---------------------------------------------------------------- bounds

struct BoundsArgs {
  std::size_t N = 0;
  unsigned q = 2;
  std::size_t w = 0;
  bool json = false;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out, std::ostream& err) {
  const Count ssw = ssw_bound(a.N, a.q, a.w);
  const auto tran = tran_bound(a.N, a.q, a.w);
  const bool warn = a.q < a.w;
  if (a.json) {
    Json params;
    params["N"] = a.N;
    params["q"] = a.q;
    params["w"] = a.w;
    Json j = envelope("bounds", params);
    Json stats;
    stats["ssw"] = ssw;
    stats["tran"] = tran ? Json(*tran) : Json(nullptr);
    if (tran) stats["d"] = (a.N - 1) / a.w;
    stats["q_below_w"] = warn;
    j["stats"] = stats;
    j["complete"] = true;
    print_json(out, j);
  } else {
    out << "n <= w(q^ceil(N/w) - 1) = " << ssw << '\n';
    if (tran)
      out << "n <= q^(d+1) = " << *tran << "  (d = " << (a.N - 1) / a.w << ")\n";
    else
      out << "q^(d+1) bound: not applicable (needs q >= w >= 2 and N = wd + 1)\n";
  }
  if (warn)
    err << "warning: q < w; the q^(d+1) bound does not hold here (the weight-one code of length N has "
        << a.N * (a.q - 1) << " codewords)\n";
  return kOk;
}

// ------------------------------------------------------------- construct

struct ConstructArgs {
  std::string name;
  std::size_t N = 0;
  unsigned q = 2;
  std::size_t k = 0;
  std::string base;
  std::string out;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  auto need_N = [&] {
    if (a.N == 0) throw UsageError(a.name + " needs --N");
    return a.N;
  };
  CodeMatrix m;
  try {
    if (a.name == "permutation") {
      m = permutation_code(need_N());
    } else if (a.name == "weight-one") {
      m = weight_one_code(need_N(), a.q);
    } else if (a.name == "identity-plus-ones") {
      m = identity_plus_ones(need_N());
    } else if (a.name == "non-perm-4x4") {
      m = non_perm_4x4();
    } else if (a.name == "block-extend") {
      m = block_extend(a.base.empty() ? non_perm_4x4() : load_matrix(a.base), a.k);
    } else {
      throw UsageError("unknown construction '" + a.name + "'");
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string text = serialize(m);
  if (a.out.empty()) {
    out << text;
  } else {
    std::ofstream f(a.out);
    if (!f) throw UsageError("cannot write " + a.out);
    f << text;
  }
  return kOk;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
  std::size_t N = 0;
  std::size_t w = 0;
  std::size_t max_n = 0;
  bool enumerate_square = false;
  unsigned threads = 1;
  bool deterministic = false;
  std::uint64_t node_budget = 0;
  double time_budget = 0;
  std::string symmetry = "rows";
  bool json = false;
};

SearchConfig make_config(const SearchArgs& a) {
  SearchConfig cfg;
  cfg.rows = a.N;
  cfg.w = a.w;
  cfg.max_columns = a.max_n;
  cfg.threads = a.threads;
  cfg.deterministic = a.deterministic;
  cfg.node_budget = a.node_budget;
  cfg.time_budget = std::chrono::milliseconds(static_cast<long long>(a.time_budget * 1000));
  cfg.symmetry = a.symmetry == "columns" ? Symmetry::columns : Symmetry::rows;
  return cfg;
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
  SearchConfig cfg;
  try {
    cfg = make_config(a);
    Json params;
    params["N"] = a.N;
    params["w"] = a.w;
    params["mode"] = a.enumerate_square ? "enumerate-square" : "max-n";
    if (!a.enumerate_square) params["symmetry"] = a.symmetry;
    if (a.max_n) params["max_n"] = a.max_n;
    if (a.node_budget) params["node_budget"] = a.node_budget;
    if (a.time_budget > 0) params["time_budget"] = a.time_budget;
    params["deterministic"] = a.deterministic;
    Json j = envelope("search", params);
    Json stats;
    std::ostringstream text;

    if (a.enumerate_square) {
      const SquareEnumeration e = enumerate_square_shf(cfg);
      std::size_t non_perm = 0;
      const SquareSolution* example = nullptr;
      for (const auto& s : e.solutions) {
        if (!s.permutation_in_standard_form) {
          ++non_perm;
          if (!example) example = &s;
        }
      }
      if (!example && !e.solutions.empty()) example = &e.solutions.front();
      j["verdict"] = e.all_permutation;
      if (example) j["witness"] = rows_json(example->matrix);
      stats["solutions"] = e.solutions.size();
      stats["non_permutation"] = non_perm;
      stats["nodes"] = e.nodes;
      if (!a.deterministic) stats["elapsed_s"] = e.elapsed.count();
      if (e.solutions.size() <= 1024) {
        Json all = Json::array();
        for (const auto& s : e.solutions) all.push_back(rows_json(s.matrix));
        stats["matrices"] = all;
      }
      j["stats"] = stats;
      j["complete"] = e.complete;
      text << "SHF(" << a.N << ";" << a.N << ",2,{1," << a.w << "}): " << e.solutions.size()
           << " solutions with increasing columns, " << non_perm << " not permutation matrices in standard form"
           << (e.complete ? "" : " (INCOMPLETE: budget hit)") << "\nnodes " << e.nodes << ", "
           << e.elapsed.count() << " s\n";
      if (example) {
        text << (non_perm ? "non-permutation example:\n" : "example:\n");
        for (std::size_t r = 0; r < example->matrix.rows(); ++r) text << "  " << example->matrix.row_string(r) << '\n';
      }
    } else {
      const SearchResult r = max_code_search(cfg);
      j["verdict"] = r.best_n <= a.N;
      j["witness"] = rows_json(r.witness);
      stats["best_n"] = r.best_n;
      stats["nodes"] = r.nodes;
      if (!a.deterministic) stats["elapsed_s"] = r.elapsed.count();
      j["stats"] = stats;
      j["complete"] = r.complete;
      text << "N=" << a.N << " w=" << a.w << ": largest n found " << r.best_n
           << (r.complete ? " (exhaustive)" : " (INCOMPLETE: budget or column cap hit)") << "\nnodes " << r.nodes
           << ", " << r.elapsed.count() << " s\nwitness:\n";
      for (std::size_t i = 0; i < r.witness.rows(); ++i) text << "  " << r.witness.row_string(i) << '\n';
    }
    if (a.json)
      print_json(out, j);
    else
      out << text.str();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

// ------------------------------------------------------------------ scan

struct ScanArgs {
  std::size_t w = 0;
  std::size_t first = 0;
  std::size_t last = 0;
  std::uint64_t node_budget = 0;
  double time_budget = 0;
  unsigned threads = 1;
  std::size_t max_square_N = 6;
  bool json = false;
};

int cmd_scan(const ScanArgs& a, std::ostream& out) {
  if (a.first == 0 || a.first > a.last) throw UsageError("scan needs 1 <= first <= last");
  ScanBudgets b;
  b.node_budget = a.node_budget;
  b.time_budget = std::chrono::milliseconds(static_cast<long long>(a.time_budget * 1000));
  b.threads = a.threads;
  b.max_square_N = a.max_square_N;
  OpenProblemReport rep;
  try {
    rep = open_problem_scan(a.w, a.first, a.last, b);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  Json params;
  params["w"] = a.w;
  params["first"] = a.first;
  params["last"] = a.last;
  Json j = envelope("scan", params);
  Json cells = Json::array();
  for (const auto& c : rep.cells) {
    Json cell;
    cell["N"] = c.N;
    cell["best_n"] = c.max_search.best_n;
    cell["exceeds"] = c.exceeds;
    cell["search_complete"] = c.max_search.complete || c.exceeds;
    if (c.square) {
      cell["square_solutions"] = c.square->solutions.size();
      cell["non_permutation_square"] = c.has_non_permutation_square;
      cell["square_complete"] = c.square->complete;
    } else {
      cell["square_complete"] = false;
    }
    cells.push_back(cell);
  }
  Json stats;
  stats["cells"] = cells;
  stats["first_exceeding"] = rep.first_exceeding ? Json(*rep.first_exceeding) : Json(nullptr);
  stats["first_non_permutation"] = rep.first_non_permutation ? Json(*rep.first_non_permutation) : Json(nullptr);
  j["verdict"] = rep.first_exceeding.has_value();
  j["stats"] = stats;
  j["complete"] = rep.complete;

  if (a.json) {
    print_json(out, j);
    return kOk;
  }
  out << "w=" << a.w << "\n   N  best_n  n>N  search      square\n";
  for (const auto& c : rep.cells) {
    out << std::setw(4) << c.N << std::setw(8) << c.max_search.best_n << std::setw(5) << (c.exceeds ? "yes" : "no")
        << "  " << std::setw(10) << std::left << (c.max_search.complete || c.exceeds ? "complete" : "incomplete")
        << std::right << "  ";
    if (!c.square)
      out << "skipped";
    else
      out << c.square->solutions.size() << " solutions, "
          << (c.has_non_permutation_square ? "non-permutation found" : "all permutation")
          << (c.square->complete ? "" : " (incomplete)");
    out << '\n';
  }
  out << "first N with n > N: " << (rep.first_exceeding ? std::to_string(*rep.first_exceeding) : "none in range")
      << "\nfirst N with a non-permutation square SHF: "
      << (rep.first_non_permutation ? std::to_string(*rep.first_non_permutation) : "none in range") << '\n';
  return kOk;
}

// -------------------------------------------------------------- theorems

int cmd_theorems(const std::string& level_name, bool json, std::ostream& out) {
  if (level_name != "quick" && level_name != "full") throw UsageError("--level must be quick or full");
  const auto level = level_name == "full" ? acceptance::Level::full : acceptance::Level::quick;
  const auto results = acceptance::run_all(level, json ? nullptr : &out);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.status != acceptance::Status::fail;
  if (json) {
    Json params;
    params["level"] = level_name;
    Json j = envelope("theorems", params);
    j["verdict"] = ok;
    Json rows = Json::array();
    bool complete = true;
    for (const auto& r : results) {
      Json row;
      row["id"] = r.id;
      row["title"] = r.title;
      row["status"] = acceptance::status_name(r.status);
      row["detail"] = r.detail;
      row["seconds"] = r.seconds;
      rows.push_back(row);
      complete = complete && r.status != acceptance::Status::incomplete;
    }
    j["stats"] = {{"criteria", rows}};
    j["complete"] = complete;
    print_json(out, j);
  }
  return ok ? kOk : kPropertyFails;
}

}  // namespace

unsigned default_threads() {
  if (const char* env = std::getenv("SHF_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separating hash family and frameproof code toolkit", "shf"};
  app.require_subcommand(1);

  VerifyArgs verify;
  verify.threads = default_threads();
  auto* v = app.add_subcommand("verify", "Check a matrix for an SHF type or the frameproof property");
  v->add_option("file", verify.file, "Matrix file")->required();
  v->add_option("--type", verify.type, "Part sizes, e.g. 1,3");
  v->add_option("--frameproof", verify.frameproof, "Coalition size w")->check(CLI::PositiveNumber);
  v->add_option("--threads", verify.threads, "Worker threads")->check(CLI::PositiveNumber);
  v->add_option("--budget", verify.budget, "Maximum number of queries to enumerate");
  v->add_flag("--json", verify.json, "Machine-readable output");

  CountArgs count;
  auto* c = app.add_subcommand("count", "Pair counts: T, per-row, common pairs, matrix diagnostics");
  c->add_option("n", count.n, "Number of columns")->required();
  c->add_option("w", count.w, "Coalition size")->required();
  c->add_option("--row-type", count.row_type, "Pairs separated by a row with this many ones");
  c->add_option("--overlap", count.overlap, "i j s: pairs separated by both of two rows")->expected(3);
  c->add_option("--matrix", count.matrix, "Diagnose a binary matrix with n columns");
  c->add_flag("--chain", count.chain, "Check the strict chain C(n-1,w) > 2C(n-2,w) > ...");
  c->add_flag("--json", count.json, "Machine-readable output");

  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "Closed-form upper bounds on n");
  b->add_option("N", bounds.N, "Code length (rows)")->required()->check(CLI::PositiveNumber);
  b->add_option("q", bounds.q, "Alphabet size")->required()->check(CLI::Range(2U, 1000U));
  b->add_option("w", bounds.w, "Coalition size")->required()->check(CLI::PositiveNumber);
  b->add_flag("--json", bounds.json, "Machine-readable output");

  ConstructArgs construct;
  auto* k = app.add_subcommand("construct", "Emit a known construction in the matrix text format");
  k->add_option("name", construct.name, "permutation | weight-one | identity-plus-ones | non-perm-4x4 | block-extend")
      ->required();
  k->add_option("--N", construct.N, "Number of rows");
  k->add_option("--q", construct.q, "Alphabet size (weight-one)");
  k->add_option("--k", construct.k, "Identity block size (block-extend)");
  k->add_option("--base", construct.base, "Base matrix file (block-extend; default non-perm-4x4)");
  k->add_option("--out", construct.out, "Output file (default stdout)");

  SearchArgs search;
  search.threads = default_threads();
  auto* s = app.add_subcommand("search", "Exhaustive search over binary {1,w} separating hash families");
  s->add_option("N", search.N, "Number of rows")->required();
  s->add_option("w", search.w, "Coalition size")->required();
  s->add_option("--max-n", search.max_n, "Stop once this many columns are reached");
  s->add_flag("--enumerate-square", search.enumerate_square, "Enumerate all SHF(N;N,2,{1,w})");
  s->add_option("--threads", search.threads, "Worker threads (default $SHF_THREADS or 1)")->check(CLI::PositiveNumber);
  s->add_flag("--deterministic", search.deterministic, "Scheduling-independent budgets and output");
  s->add_option("--node-budget", search.node_budget, "Maximum partial matrices expanded");
  s->add_option("--time-budget", search.time_budget, "Wall-clock limit in seconds");
  s->add_option("--symmetry", search.symmetry, "rows (default) or columns")
      ->check(CLI::IsMember({"rows", "columns"}));
  s->add_flag("--json", search.json, "Machine-readable output");

  ScanArgs scan;
  scan.threads = default_threads();
  auto* sc = app.add_subcommand("scan", "Smallest N with n > N, and with a non-permutation square SHF");
  sc->add_option("w", scan.w, "Coalition size")->required();
  sc->add_option("first", scan.first, "First N")->required();
  sc->add_option("last", scan.last, "Last N")->required();
  sc->add_option("--node-budget", scan.node_budget, "Per-search node budget");
  sc->add_option("--time-budget", scan.time_budget, "Per-search wall-clock limit in seconds");
  sc->add_option("--threads", scan.threads, "Worker threads")->check(CLI::PositiveNumber);
  sc->add_option("--max-square-N", scan.max_square_N, "Skip square enumeration above this N");
  sc->add_flag("--json", scan.json, "Machine-readable output");

  std::string level = "quick";
  bool theorems_json = false;
  auto* t = app.add_subcommand("theorems", "Run the acceptance checks and print a pass/fail table");
  t->add_option("--level", level, "quick or full");
  t->add_flag("--json", theorems_json, "Machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (v->parsed()) return cmd_verify(verify, out);
    if (c->parsed()) return cmd_count(count, out);
    if (b->parsed()) return cmd_bounds(bounds, out, err);
    if (k->parsed()) return cmd_construct(construct, out);
    if (s->parsed()) return cmd_search(search, out);
    if (sc->parsed()) return cmd_scan(scan, out);
    if (t->parsed()) return cmd_theorems(level, theorems_json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace shf::cli
