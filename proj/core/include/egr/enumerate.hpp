#pragma once

#include <string>
#include <vector>

#include "egr/units.hpp"

namespace egr {

struct EnumerationStats {
    size_t n_ideals = 0;       // |L|
    size_t n_generators = 0;   // |G|
    size_t n_units = 0;        // |U| actually used
    size_t unresolved = 0;     // coprime pairs whose generator search came back empty
    Q B0 = 0;                  // rational upper bound for max H(xi)
};

struct EnumerationResult {
    std::vector<NFElement> elements;
    EnumerationStats stats;
    bool complete = false;
    std::string completeness;  // "complete" or "complete relative to supplied units"
};

/// All x in K with H_K(x) <= B (Algorithm: ideal pairs, generators, unit
/// multiples, exact height filter).  Completeness holds when the unit group
/// is certified or supplied-complete and every pair was resolved; otherwise
/// the result is labeled complete relative to the supplied units.
EnumerationResult enumerate_bounded_height(NFPtr K, const Q& B, const UnitGroup& U);
EnumerationResult enumerate_bounded_height(NFPtr K, const Q& B);

/// All x with denominator ideal exactly b and H_K(x) <= B; includes 0 when
/// b is the whole ring.
std::vector<NFElement> enumerate_with_denominator(NFPtr K, const Ideal& b, const Q& B,
                                                  const UnitGroup& U);

/// Independent oracle: exhaustive scan of x = y/m with y integral
/// (coordinates in [-box, box]) and 1 <= m <= B, exact height filter.
/// The caller is responsible for a box large enough to cover H <= B.
std::vector<NFElement> brute_force_bounded_height(NFPtr K, const Q& B, long box);

/// Deterministic ordering used for all element lists: ascending approximate
/// height, then coordinate string.
void sort_elements(std::vector<NFElement>& v);

}  // namespace egr
