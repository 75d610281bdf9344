#include "lattice_hardy/lattice_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "lattice_hardy/errors.hpp"

namespace lattice_hardy {
namespace {

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, end);
}

[[noreturn]] void parse_failure(int line_no, const std::string& why) {
  throw ArgumentError("lattice function input, line " + std::to_string(line_no) + ": " + why);
}

}  // namespace

LatticeFunction read_lattice_function(std::istream& in) {
  std::string line;
  int line_no = 0;
  int dim = 0;
  LatticeFunction u;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    fields.imbue(std::locale::classic());
    if (dim == 0) {
      std::string keyword;
      if (!(fields >> keyword >> dim) || keyword != "dim") parse_failure(line_no, "expected 'dim <d>'");
      try {
        u = LatticeFunction(dim);
      } catch (const ArgumentError& e) {
        parse_failure(line_no, e.what());
      }
      continue;
    }
    std::vector<int> coords(static_cast<std::size_t>(dim));
    for (auto& c : coords) {
      if (!(fields >> c)) parse_failure(line_no, "expected " + std::to_string(dim) + " integer coordinates");
    }
    std::string value_text;
    if (!(fields >> value_text)) parse_failure(line_no, "missing value");
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(value_text.data(), value_text.data() + value_text.size(), value);
    if (ec != std::errc() || ptr != value_text.data() + value_text.size()) {
      parse_failure(line_no, "bad value '" + value_text + "'");
    }
    std::string extra;
    if (fields >> extra) parse_failure(line_no, "trailing field '" + extra + "'");
    const MultiIndex n(coords);
    if (u.contains(n)) parse_failure(line_no, "duplicate site " + n.to_string());
    u.set(n, value);
  }
  if (dim == 0) throw ArgumentError("lattice function input: missing 'dim' header");
  return u;
}

void write_lattice_function(std::ostream& out, const LatticeFunction& u) {
  out << "dim " << u.dim() << '\n';
  for (const auto& [n, v] : u.sorted_entries()) {
    for (int c : n.coords()) out << c << ' ';
    out << format_double(v) << '\n';
  }
}

LatticeFunction load_lattice_function(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open '" + path + "'");
  return read_lattice_function(in);
}

void save_lattice_function(const std::string& path, const LatticeFunction& u) {
  std::ofstream out(path);
  if (!out) throw ArgumentError("cannot write '" + path + "'");
  write_lattice_function(out, u);
}

}  // namespace lattice_hardy
