#ifndef ODDMINOR_TOOLS_CLI_H_
#define ODDMINOR_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace oddminor::cli {

enum ExitCode : int {
  kOk = 0,          // success or PASS
  kFail = 1,        // FAIL or NOT FOUND
  kUsage = 2,       // bad flags or unreadable input
  kResource = 3,    // a search or colouring budget ran out
};

/// Runs one subcommand. `args` excludes the program name. Machine-readable
/// output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace oddminor::cli

#endif  // ODDMINOR_TOOLS_CLI_H_
