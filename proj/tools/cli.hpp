#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fracspace::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;

/// Runs one command. `args` excludes the program name. Results go to out,
/// diagnostics to err; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fracspace::cli
