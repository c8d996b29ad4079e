#ifndef VBRAID_CLI_HPP_
#define VBRAID_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace vbraid::cli {

  // Exit codes. Boolean subcommands (almost-classical, equal, pipeline, fuzz)
  // also return `no` when their answer is negative.
  enum ExitCode : int { ok = 0, no = 1, usage = 2, failure = 3 };

  // Runs the command line `args` (without the program name). Results go to
  // `out`, diagnostics to `err`.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace vbraid::cli

#endif  // VBRAID_CLI_HPP_
