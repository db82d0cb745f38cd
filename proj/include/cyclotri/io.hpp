#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "cyclotri/complex.hpp"
#include "cyclotri/diff_cycle.hpp"

namespace cyclotri {

/// ".dc": `n <N>`, then one colon-separated cycle per line.
CyclicComplex parse_dc(std::string_view text);
/// Canonical cycles, sorted, one per line.
std::string format_dc(const CyclicComplex& cc);

/// ".tri": `dim <d>`, `vertices <n>`, then one facet per line; `#` comments.
SimplicialComplex parse_tri(std::string_view text);
std::string format_tri(const SimplicialComplex& c);

using AnyComplex = std::variant<CyclicComplex, SimplicialComplex>;

/// Detects the format from the first non-comment line.
AnyComplex parse_any(std::string_view text);

/// Reads a file, or standard input for "-".
std::string read_input(const std::string& path, std::istream& stdin_stream);

SimplicialComplex as_simplicial(const AnyComplex& c);

}  // namespace cyclotri
