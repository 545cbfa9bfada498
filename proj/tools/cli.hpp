#ifndef FEWSPHERE_TOOLS_CLI_HPP
#define FEWSPHERE_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fewsphere::cli {

// Exit statuses.
inline constexpr int kExitSphere = 0;
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotSphere = 1;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitOutOfScope = 2;
inline constexpr int kExitInputError = 64;

/// Runs one invocation.  args[0] is the program name.  `in` stands in for
/// standard input when no --input file is given, `out` for standard output
/// when no --output file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fewsphere::cli

#endif
