#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace goldbug::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;

struct Environment {
    // Value of GOLDBUG_CONFIG, if set. --config takes precedence.
    std::optional<std::string> config_path;
};

// Runs the goldbug command line. args[0] is the program name.
// Results go to `out`, diagnostics to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env = {});

}  // namespace goldbug::cli
