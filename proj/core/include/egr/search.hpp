#pragma once

#include <vector>

#include "egr/enumerate.hpp"
#include "egr/relext.hpp"

namespace egr {

struct SearchCandidate {
    NFElement alpha;                    // integral element of K
    std::vector<NFElement> rel_minpoly; // monic, coefficients in F, low to high
};

struct SearchResult {
    std::vector<SearchCandidate> candidates;
    bool exhaustive = false;  // false whenever the unit list is not certified complete
};

/// Integral elements of K with H_K(alpha) <= B generating K over F, sorted by
/// height, with their relative minimal polynomials.
SearchResult candidate_pair_search(const RelativeExtension& ext, const UnitGroup& U,
                                   const Q& B);

/// Product h(x) * h'(x) over F of the minimal polynomials of a matched
/// candidate pair.
std::vector<NFElement> paired_polynomial(const std::vector<NFElement>& h,
                                         const std::vector<NFElement>& hp);

}  // namespace egr
