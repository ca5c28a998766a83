#pragma once

#include "egr/ideal.hpp"
#include "egr/numfield.hpp"

namespace egr {

/// Multiplicative Weil height relative to K:
///   H(x) = N(den) * prod_v max(1, |x|_v^{n_v})
/// over the archimedean places, with den the denominator ideal of x.
/// H(0) is taken to be 1.

/// Certified enclosure of H(x).
RBall height_ball(const NFElement& x, unsigned prec);

/// Exact three way comparison of H(x) against a rational bound B > 0.
/// Ties are decided exactly through integer subset product polynomials,
/// never by a fixed epsilon.
int height_compare(const NFElement& x, const Q& B);

inline bool height_leq(const NFElement& x, const Q& B) {
    return height_compare(x, B) <= 0;
}

/// Norm of the denominator ideal of x (1 for x = 0).
Z height_denominator_norm(const NFElement& x);

/// Exact classification of |x|_v against 1 for each archimedean place:
/// -1, 0, +1 per place, real places first.
std::vector<int> archimedean_compare_one(const NFElement& x);

/// If every |x|_v with |x|_v > 1 comes in full conjugate sets whose product
/// is rational, H(x) is rational; returns true and the exact value in that
/// case.  Always true for x = 0 or rational x; may also hold otherwise.
bool height_exact_rational(const NFElement& x, Q& out);

}  // namespace egr
