#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eugb {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitVerification = 2,
  kExitGuard = 3,
};

/// The `gb` command. `args` excludes the program name. The report goes to
/// `out`; diagnostics and the round trace go to `err`.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eugb
