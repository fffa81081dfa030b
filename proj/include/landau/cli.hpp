#pragma once

// Command-line front end. Subcommands: zeros, count, spectrum, wavefunction,
// classical, area. Exit codes: 0 success, 2 configuration or domain error,
// 3 numerical failure. Diagnostics go to the error stream only.

#include <iosfwd>
#include <string>
#include <vector>

namespace landau::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

// args excludes the program name. Output goes to --out when given, else to out.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace landau::cli
