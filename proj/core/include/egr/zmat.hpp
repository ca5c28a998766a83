#pragma once

#include <vector>

#include "egr/linalg.hpp"
#include "egr/util.hpp"

namespace egr {

/// Integer matrix, m[i][j] = entry in row i, column j.
using ZMat = std::vector<std::vector<Z>>;
using ZVec = std::vector<Z>;

ZMat zmat_identity(int n);
ZMat zmat_mul(const ZMat& a, const ZMat& b);
ZVec zmat_apply(const ZMat& m, const ZVec& v);

/// Lower-triangular column Hermite form of the lattice spanned by the columns
/// of a (n rows, any number of columns, assumed full rank n).  Result is
/// n x n with positive diagonal and off-diagonal entries reduced modulo the
/// diagonal entry of their row.
ZMat hnf_lower(const ZMat& a);

/// Basis (as columns) of the integer kernel {v : a v = 0}.
ZMat zmat_kernel(const ZMat& a);

/// Basis (as columns) of the solution lattice {y : a y = 0 mod N}.
ZMat solve_mod_lattice(const ZMat& a, const Z& N);

/// det of a square integer matrix (exact, via rational elimination).
Z zmat_det(const ZMat& a);

/// Does the column lattice of h (lower triangular HNF) contain v?
bool hnf_contains(const ZMat& h, const ZVec& v);

/// Solve h x = v over Z for lower-triangular h; false if not in the lattice.
bool hnf_solve(const ZMat& h, const ZVec& v, ZVec& x);

QMat zmat_to_q(const ZMat& a);

}  // namespace egr
