#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bitlet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitExpectationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args exclude the program name). Output goes to
/// `out`, diagnostics to `err`. `serve` blocks until the server stops.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bitlet::cli
