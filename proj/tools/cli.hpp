// The freegrowth command line: count, fit and verify.

#ifndef FREEGROWTH_TOOLS_CLI_HPP_
#define FREEGROWTH_TOOLS_CLI_HPP_

#include <chrono>   // for seconds
#include <iosfwd>   // for ostream
#include <string>   // for string
#include <vector>   // for vector

namespace freegrowth::cli {

  enum exit_code : int {
    ok              = 0,
    mismatch        = 1,
    invalid_flags   = 2,
    resource_limit  = 3,
    internal_error  = 4,
    budget_exhausted = 5
  };

  // "90", "30s", "10m", "2h"; throws freegrowth::Error on bad input.
  std::chrono::seconds parse_budget(std::string const& text);

  // args excludes the program name.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace freegrowth::cli

#endif  // FREEGROWTH_TOOLS_CLI_HPP_
