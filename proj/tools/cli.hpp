#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bcb::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kSpecViolation = 3;
inline constexpr int kBudget = 4;

// Runs one command line (args excludes the program name). Results go to
// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bcb::cli
