#pragma once

#include "cyclotri/complex.hpp"

namespace cyclotri {

/// Performs elementary collapses until no free face is left and returns the
/// residual complex.  The lexicographically smallest free face goes first.
SimplicialComplex greedy_collapse(const SimplicialComplex& c);

}  // namespace cyclotri
