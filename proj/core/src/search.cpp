#include "egr/search.hpp"

#include "egr/g2.hpp"

namespace egr {

SearchResult candidate_pair_search(const RelativeExtension& ext, const UnitGroup& U,
                                   const Q& B) {
    SearchResult out;
    std::vector<NFElement> integral =
        enumerate_with_denominator(ext.K, ideal_whole(ext.K), B, U);
    sort_elements(integral);
    for (const NFElement& alpha : integral) {
        if (alpha.is_zero()) continue;
        std::vector<NFElement> mp = minpoly_relative(alpha, ext);
        if ((int)mp.size() - 1 != ext.rel_degree) continue;  // generates a subfield only
        out.candidates.push_back({alpha, std::move(mp)});
    }
    out.exhaustive = U.cert == UnitCertification::CertifiedFundamental && U.full_rank();
    return out;
}

std::vector<NFElement> paired_polynomial(const std::vector<NFElement>& h,
                                         const std::vector<NFElement>& hp) {
    return fpoly_mul(h, hp);
}

}  // namespace egr
