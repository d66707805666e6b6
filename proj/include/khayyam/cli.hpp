#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace khayyam {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,           ///< bad flags, unparsable equation, invalid parameters
  kExitClassification = 2,  ///< cubic outside the thirteen species
  kExitVerification = 3,    ///< fuzz batch found a disagreement or count violation
};

/// Runs the CLI on args (args[0] is the program name), writing normal output
/// to out and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace khayyam
