#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shockprof::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitNumerical = 2;

// Runs one subcommand. `args` excludes the program name. Results go to `out`
// (or to --out files), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Parses "min:max:count" into an evenly spaced grid; throws InvalidInput.
std::vector<double> parse_grid(const std::string& spec);

}  // namespace shockprof::cli
