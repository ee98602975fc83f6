#pragma once

#include <iosfwd>

namespace unigate {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;       // bad flags or unparseable input
inline constexpr int kExitNotUnitary = 3;  // gate fails the unitarity check
inline constexpr int kExitIo = 4;          // file cannot be read or written

/// Runs the `unigate` command line. Summaries go to `out` as key=value
/// lines, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace unigate
