#pragma once

#include <optional>
#include <vector>

#include "egr/ideal.hpp"
#include "egr/numfield.hpp"

namespace egr {

enum class UnitCertification { CertifiedFundamental, Heuristic, Supplied };

/// Unit group data: torsion generator plus a list of multiplicatively
/// independent units.  When certification is Heuristic the list may generate
/// only a finite-index subgroup, and downstream consumers must not claim
/// completeness.
struct UnitGroup {
    NFPtr K;
    NFElement torsion_gen;
    int torsion_order = 2;
    std::vector<NFElement> gens;
    UnitCertification cert = UnitCertification::Heuristic;

    int rank() const { return (int)gens.size(); }
    bool full_rank() const { return rank() == K->unit_rank(); }
    std::vector<NFElement> torsion_units() const;
};

/// True for D > 1 a fundamental discriminant (D ≡ 1 mod 4 squarefree, or
/// D = 4m with m squarefree and m ≡ 2, 3 mod 4).
bool is_fundamental_discriminant_real(const Z& D);

/// Fundamental unit of the real quadratic order of discriminant D, via the
/// continued fraction of (t + sqrt(D))/2.  Returned with nonnegative
/// coordinates over {1, (t + sqrt(D))/2}, so the unit exceeds 1 at the
/// embedding sending sqrt(D) to the positive root.
/// The element lives in the field returned through *field.
NFElement fundamental_unit_quadratic(const Z& D, NFPtr* field = nullptr);

/// Same unit expressed in an existing real quadratic field K.
NFElement fundamental_unit_quadratic_in(NFPtr K);

/// Narrow class number of the real quadratic field of discriminant D,
/// counted as cycles of reduced indefinite binary quadratic forms.
Z narrow_class_number_quadratic(const Z& D);

/// Unit group of K.  Quadratic fields are certified; higher degree uses
/// the supplied units when given (verified, flagged Supplied), otherwise a
/// heuristic short-vector search saturated at the primes 2 and 3.
UnitGroup unit_group(NFPtr K);
UnitGroup unit_group_supplied(NFPtr K, const std::vector<QVec>& integral_coords,
                              bool certified);

/// All units u in the span of U (torsion multiples included) with
/// H_K(u) <= B, via Fincke-Pohst in the log lattice over the ball of
/// squared radius 2 (log B)^2, then exact height filtering.
/// B < 1 yields the empty list.
std::vector<NFElement> units_of_height_up_to(const UnitGroup& U, const Q& B);

/// Searches I (integral) for a generator among short vectors of bounded
/// T2 norm, largest budget max_scale times the balanced starting budget.
/// nullopt means not found within the region, which is not a proof of
/// non-principality.
std::optional<NFElement> principal_generator(const Ideal& I, int max_scale = 64);

/// Associate of x with roughly balanced archimedean absolute values, found
/// by Babai rounding of the log vector against the generators of U.
NFElement unit_reduce(const NFElement& x, const UnitGroup& U);

/// Generator search for ideals whose every generator is too skewed for the
/// direct short-vector search: factors I into prime ideals, multiplies
/// unit-reduced per-prime generators, and reduces the product.  Requires a
/// complete factorization of the norm; nullopt is still not a proof of
/// non-principality.
std::optional<NFElement> principal_generator_factored(const Ideal& I,
                                                      const UnitGroup& U);

}  // namespace egr
