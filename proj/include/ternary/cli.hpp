#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ternary {

/// Settings shared by all subcommands.
struct RunConfig {
  int order = 1000;
  std::int64_t maxN = 1000;
  std::vector<std::int64_t> primes;
  std::string format = "table";
  std::string output;
  bool timing = false;
};

/// Default truncation order: TERNARY_ORDER if set, else 1000.
int defaultOrder();

/// Exit codes: 0 all checks passed, 1 a check failed, 2 usage error.
/// `args` excludes the program name.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ternary
