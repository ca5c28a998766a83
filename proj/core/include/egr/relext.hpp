#pragma once

#include <string>
#include <vector>

#include "egr/numfield.hpp"

namespace egr {

/// K/F with F quadratic, given by an absolute model of K together with the
/// image of the generator of F inside K.
struct RelativeExtension {
    NFPtr F;
    NFPtr K;
    NFElement w_img;  // root of F's defining polynomial inside K
    int rel_degree = 0;
};

/// Galois conjugate in a quadratic field (the nontrivial automorphism).
NFElement quad_conj(const NFElement& x);

/// Builds K = F[x]/(g) for a monic g over a quadratic field F, returned as an
/// absolute field of degree 2 deg(g).  Coefficients of g are elements of F,
/// low to high, monic.  The absolute polynomial is the resultant
/// Res_y(f_F(y), g(x; y)) where y stands for the generator of F.
RelativeExtension build_relative(NFPtr F, const std::vector<NFElement>& g,
                                 const std::string& label);

/// Wraps an existing absolute field: locates the image of F's generator by
/// solving f_F inside K.  Throws when F does not embed.
RelativeExtension relative_from_absolute(NFPtr F, NFPtr K);

/// Monic minimal polynomial of alpha over F, coefficients in F low to high.
/// Its degree divides [K:F].
std::vector<NFElement> minpoly_relative(const NFElement& alpha,
                                        const RelativeExtension& ext);

/// Evaluates a polynomial with F-coefficients at an element of K, mapping
/// the coefficients through w_img.
NFElement eval_relative(const std::vector<NFElement>& poly, const NFElement& x,
                        const RelativeExtension& ext);

/// Applies the automorphism of F to every coefficient.
std::vector<NFElement> conj_coeffs(const std::vector<NFElement>& poly);

}  // namespace egr
