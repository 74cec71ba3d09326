#ifndef POLYTOPE_CLI_HPP
#define POLYTOPE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace polytope::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInvalidPolytope = 1,
  kParseError = 2,
  kNotFamily = 3,
  kBudgetExceeded = 4,
};

/// Entry point of the `polyaut` tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace polytope::cli

#endif // POLYTOPE_CLI_HPP
