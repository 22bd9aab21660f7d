#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shf::cli {

enum ExitCode : int {
  kOk = 0,
  kPropertyFails = 1,
  kUsageError = 2,
};

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default worker count: $SHF_THREADS if set and positive, else 1.
unsigned default_threads();

}  // namespace shf::cli
