#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sevenfour::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInvalidInput = 2, kResourceExhausted = 3 };

inline constexpr int kSchemaVersion = 1;

/// Parses `args` (without the program name), runs one subcommand and writes
/// its output to `out` (or the --out file). Diagnostics go to `err`.
/// Returns one of the ExitCode values.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sevenfour::cli
