#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace repcount::cli {

  enum ExitCode : int {
    exit_ok           = 0,
    exit_internal     = 1,
    exit_parse        = 2,
    exit_inconclusive = 3,
    exit_infinite     = 4,
  };

  // Entry point behind the repcount binary. args excludes the program name.
  // The result goes to out, diagnostics and dumps to err.
  int run(std::span<std::string const> args, std::ostream& out, std::ostream& err);

}  // namespace repcount::cli
