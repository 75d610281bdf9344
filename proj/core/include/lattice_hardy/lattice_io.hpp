#pragma once

#include <iosfwd>
#include <string>

#include "lattice_hardy/lattice.hpp"

namespace lattice_hardy {

/// Plain-text exchange format for lattice functions:
///
///     dim <d>
///     <n_1> ... <n_d> <value>
///     ...
///
/// Blank lines and lines starting with '#' are ignored. Values are written
/// with 17 significant digits, so a write/read cycle is bit exact.
LatticeFunction read_lattice_function(std::istream& in);
void write_lattice_function(std::ostream& out, const LatticeFunction& u);

LatticeFunction load_lattice_function(const std::string& path);
void save_lattice_function(const std::string& path, const LatticeFunction& u);

}  // namespace lattice_hardy
