#ifndef FPSLAB_TOOLS_CLI_HPP
#define FPSLAB_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace fpslab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Artifacts go to `out`
/// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace fpslab::cli

#endif  // FPSLAB_TOOLS_CLI_HPP
