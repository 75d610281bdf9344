#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lattice_hardy/estimator.hpp"

namespace lattice_hardy::cli {

/// Exit codes: success (including every verification that holds),
/// usage or domain errors, and falsifications / bracket violations.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFalsified = 2;

/// Entry point of the lattice-hardy tool. argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

/// "a..b" (inclusive), "a,b,c" or a single integer.
std::vector<int> parse_dims(std::string_view text);

/// Shortest text that reads back to the same double (at most 17 digits).
std::string format_number(double v);

/// Gnuplot-style series blocks
///   # series estimate | lower | upper
///   <d> <value>
/// followed by "# fit <series> slope=.. intercept=.. r2=.." lines when
/// `with_fit` is set and a series has at least 3 points.
/// Throws ArgumentError on an empty table.
void emit_plot_data(const SweepTable& table, bool with_fit, std::ostream& out);

}  // namespace lattice_hardy::cli
