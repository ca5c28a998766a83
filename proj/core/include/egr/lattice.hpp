#pragma once

#include <functional>

#include "egr/zmat.hpp"

namespace egr {

/// LLL reduction working on the Gram matrix only.  G is replaced by the Gram
/// matrix of the reduced basis; U collects the column transformation, i.e.
/// new basis vector j = sum_i U[i][j] * old basis vector i.
void lll_gram(QMat& G, ZMat& U, const Q& delta = Q(3, 4));

/// Enumerate all nonzero integer vectors x (up to sign) with x^T G x <= C
/// for a positive definite rational G.  The callback returns false to stop.
void fincke_pohst(const QMat& G, const Q& C,
                  const std::function<bool(const std::vector<Z>&, const Q&)>& cb);

}  // namespace egr
