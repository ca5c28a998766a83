#pragma once

#include <vector>

#include "egr/poly.hpp"

namespace egr {

/// Squarefree decomposition over Q (Yun): pairs (monic squarefree, multiplicity).
std::vector<std::pair<QPoly, int>> qpoly_squarefree_decomp(const QPoly& f);

/// Irreducible factorization over Q: pairs (monic irreducible, multiplicity).
/// Modular factorization with Hensel lifting and subset recombination.
std::vector<std::pair<QPoly, int>> qpoly_factor(const QPoly& f);

bool qpoly_irreducible(const QPoly& f);

}  // namespace egr
