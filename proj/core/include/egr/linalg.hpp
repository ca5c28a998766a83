#pragma once

#include <vector>

#include "egr/util.hpp"

namespace egr {

using QMat = std::vector<std::vector<Q>>;
using QVec = std::vector<Q>;

inline QMat qmat_identity(int n) {
    QMat m(n, QVec(n, Q(0)));
    for (int i = 0; i < n; i++) m[i][i] = 1;
    return m;
}

inline QVec qmat_apply(const QMat& m, const QVec& v) {
    QVec r(m.size(), Q(0));
    for (size_t i = 0; i < m.size(); i++)
        for (size_t j = 0; j < v.size(); j++)
            if (v[j] != 0) r[i] += m[i][j] * v[j];
    return r;
}

inline QMat qmat_mul(const QMat& a, const QMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    QMat r(n, QVec(m, Q(0)));
    for (size_t i = 0; i < n; i++)
        for (size_t l = 0; l < k; l++)
            if (a[i][l] != 0)
                for (size_t j = 0; j < m; j++) r[i][j] += a[i][l] * b[l][j];
    return r;
}

/// Reduce to row echelon form in place; returns pivot column indices.
inline std::vector<int> qmat_rref(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t col = 0; col < cols && r < rows; col++) {
        size_t sel = r;
        while (sel < rows && m[sel][col] == 0) sel++;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Q inv = 1 / m[r][col];
        for (size_t j = col; j < cols; j++) m[r][j] *= inv;
        for (size_t i = 0; i < rows; i++) {
            if (i != r && m[i][col] != 0) {
                Q f = m[i][col];
                for (size_t j = col; j < cols; j++) m[i][j] -= f * m[r][j];
            }
        }
        pivots.push_back((int)col);
        r++;
    }
    return pivots;
}

/// Basis of the right kernel of m.
inline std::vector<QVec> qmat_kernel(QMat m) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    auto pivots = qmat_rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (size_t fc = 0; fc < cols; fc++) {
        if (is_pivot[fc]) continue;
        QVec v(cols, Q(0));
        v[fc] = 1;
        for (size_t pi = 0; pi < pivots.size(); pi++) v[pivots[pi]] = -m[pi][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve m x = b; returns false when inconsistent.
inline bool qmat_solve(QMat m, QVec b, QVec& x) {
    size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    for (size_t i = 0; i < rows; i++) m[i].push_back(b[i]);
    auto pivots = qmat_rref(m);
    if (!pivots.empty() && pivots.back() == (int)cols) return false;
    x.assign(cols, Q(0));
    for (size_t pi = 0; pi < pivots.size(); pi++) x[pivots[pi]] = m[pi][cols];
    return true;
}

inline Q qmat_det(QMat m) {
    size_t n = m.size();
    Q det = 1;
    for (size_t col = 0; col < n; col++) {
        size_t sel = col;
        while (sel < n && m[sel][col] == 0) sel++;
        if (sel == n) return Q(0);
        if (sel != col) {
            std::swap(m[sel], m[col]);
            det = -det;
        }
        det *= m[col][col];
        Q inv = 1 / m[col][col];
        for (size_t i = col + 1; i < n; i++) {
            if (m[i][col] == 0) continue;
            Q f = m[i][col] * inv;
            for (size_t j = col; j < n; j++) m[i][j] -= f * m[col][j];
        }
    }
    return det;
}

}  // namespace egr
