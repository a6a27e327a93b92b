#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zcong {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitRefuted = 1, kExitUsage = 2, kExitInsufficient = 3 };

/// Runs `zcong <command> ...` with argv[0] omitted. Normal output goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a..b" or "a" into an inclusive range. Returns false on malformed
/// input, a > b, a < 2, or a one-point range whose point is not prime.
bool parse_prime_range(const std::string& text, unsigned long& lo, unsigned long& hi);

}  // namespace zcong
