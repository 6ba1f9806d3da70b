#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rcb/suites.hpp"

namespace rcb {

enum class OutputFormat { Default, Json, Csv, Text };

struct RunConfig {
  std::uint64_t seed = 42;
  std::size_t sample_count = 20;
  unsigned max_n = 5;
  unsigned max_degree = 3;
  unsigned hbar_order = 6;
  unsigned threads = 0;
  OutputFormat output = OutputFormat::Default;

  SuiteConfig suite_config() const;
};

/// Runs the command line `args` (without the program name). Exit codes:
/// 0 pass or report_only, 1 failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rcb
