#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace actsep {

  // Exit codes of the command-line tool.
  enum ExitCode : int {
    exit_ok         = 0,
    exit_negative   = 1,  // a check ran and came out negative
    exit_usage      = 2,
    exit_invalid    = 3,  // parse or validation failure
    exit_search_cap = 4,
    exit_internal   = 5,
  };

  // Runs one invocation; args excludes the program name.
  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err);

}  // namespace actsep
