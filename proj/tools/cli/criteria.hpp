#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shf::acceptance {

enum class Level { quick, full };

enum class Status { pass, fail, incomplete };

struct CriterionResult {
  int id = 0;
  std::string title;
  Status status = Status::fail;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no wall-clock limit
};

inline constexpr int kCriterionCount = 10;

/// Runs one criterion (1-based id). The full level adds the budget-bounded
/// N = 7 enumeration and N = 8 search to criterion 6.
CriterionResult run_criterion(int id, Level level);

/// Runs every criterion, printing one line per criterion to `log` if given.
std::vector<CriterionResult> run_all(Level level, std::ostream* log = nullptr);

std::string format_line(const CriterionResult& r);
const char* status_name(Status s);

}  // namespace shf::acceptance
