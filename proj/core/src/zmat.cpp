#include "egr/zmat.hpp"

#include <stdexcept>

namespace egr {

ZMat zmat_identity(int n) {
    ZMat m(n, ZVec(n, Z(0)));
    for (int i = 0; i < n; i++) m[i][i] = 1;
    return m;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    ZMat r(n, ZVec(m, Z(0)));
    for (size_t i = 0; i < n; i++)
        for (size_t l = 0; l < k; l++)
            if (a[i][l] != 0)
                for (size_t j = 0; j < m; j++) r[i][j] += a[i][l] * b[l][j];
    return r;
}

ZVec zmat_apply(const ZMat& m, const ZVec& v) {
    ZVec r(m.size(), Z(0));
    for (size_t i = 0; i < m.size(); i++)
        for (size_t j = 0; j < v.size(); j++)
            if (v[j] != 0) r[i] += m[i][j] * v[j];
    return r;
}

ZMat hnf_lower(const ZMat& a) {
    size_t n = a.size();
    size_t m = a.empty() ? 0 : a[0].size();
    ZMat w = a;  // column operations in place
    auto col_combine = [&](size_t r, size_t c1, size_t c2) {
        // make w[r][c2] = 0 using an extended gcd of entries in row r
        Z u = w[r][c1], v = w[r][c2];
        if (v == 0) return;
        Z g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
        Z us = u / g, vs = v / g;
        for (size_t i = 0; i < n; i++) {
            Z t1 = x * w[i][c1] + y * w[i][c2];
            Z t2 = us * w[i][c2] - vs * w[i][c1];
            w[i][c1] = t1;
            w[i][c2] = t2;
        }
    };
    size_t col = 0;
    for (size_t r = 0; r < n && col < m; r++) {
        size_t piv = col;
        while (piv < m && w[r][piv] == 0) piv++;
        if (piv == m) throw std::domain_error("hnf_lower: rank deficient input");
        if (piv != col)
            for (size_t i = 0; i < n; i++) std::swap(w[i][piv], w[i][col]);
        for (size_t j = col + 1; j < m; j++) col_combine(r, col, j);
        if (w[r][col] < 0)
            for (size_t i = 0; i < n; i++) w[i][col] = -w[i][col];
        // reduce earlier columns modulo the new pivot
        for (size_t j = 0; j < col; j++) {
            Z q;
            mpz_fdiv_q(q.get_mpz_t(), w[r][j].get_mpz_t(), w[r][col].get_mpz_t());
            if (q != 0)
                for (size_t i = 0; i < n; i++) w[i][j] -= q * w[i][col];
        }
        col++;
    }
    ZMat h(n, ZVec(n, Z(0)));
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++) h[i][j] = w[i][j];
    return h;
}

ZMat zmat_kernel(const ZMat& a) {
    size_t n = a.size();
    size_t m = a.empty() ? 0 : a[0].size();
    ZMat w = a;
    ZMat u(m, ZVec(m, Z(0)));
    for (size_t i = 0; i < m; i++) u[i][i] = 1;
    auto col_combine = [&](size_t r, size_t c1, size_t c2) {
        Z p1 = w[r][c1], p2 = w[r][c2];
        if (p2 == 0) return;
        if (p1 == 0) {
            for (size_t i = 0; i < n; i++) std::swap(w[i][c1], w[i][c2]);
            for (size_t i = 0; i < m; i++) std::swap(u[i][c1], u[i][c2]);
            return;
        }
        Z g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), p1.get_mpz_t(), p2.get_mpz_t());
        Z us = p1 / g, vs = p2 / g;
        for (size_t i = 0; i < n; i++) {
            Z t1 = x * w[i][c1] + y * w[i][c2];
            Z t2 = us * w[i][c2] - vs * w[i][c1];
            w[i][c1] = t1;
            w[i][c2] = t2;
        }
        for (size_t i = 0; i < m; i++) {
            Z t1 = x * u[i][c1] + y * u[i][c2];
            Z t2 = us * u[i][c2] - vs * u[i][c1];
            u[i][c1] = t1;
            u[i][c2] = t2;
        }
    };
    size_t col = 0;
    for (size_t r = 0; r < n && col < m; r++) {
        size_t piv = col;
        while (piv < m && w[r][piv] == 0) piv++;
        if (piv == m) continue;
        if (piv != col) {
            for (size_t i = 0; i < n; i++) std::swap(w[i][piv], w[i][col]);
            for (size_t i = 0; i < m; i++) std::swap(u[i][piv], u[i][col]);
        }
        for (size_t j = col + 1; j < m; j++) col_combine(r, col, j);
        col++;
    }
    ZMat ker(m);
    size_t kcount = 0;
    for (size_t j = col; j < m; j++) {
        bool zero = true;
        for (size_t i = 0; i < n; i++)
            if (w[i][j] != 0) zero = false;
        if (zero) kcount++;
    }
    for (size_t i = 0; i < m; i++) ker[i].assign(kcount, Z(0));
    size_t kc = 0;
    for (size_t j = col; j < m; j++) {
        bool zero = true;
        for (size_t i = 0; i < n; i++)
            if (w[i][j] != 0) zero = false;
        if (!zero) continue;
        for (size_t i = 0; i < m; i++) ker[i][kc] = u[i][j];
        kc++;
    }
    return ker;
}

ZMat solve_mod_lattice(const ZMat& a, const Z& N) {
    size_t rows = a.size();
    size_t n = a.empty() ? 0 : a[0].size();
    // kernel of [a | N I] projected to the first n coordinates
    ZMat big(rows, ZVec(n + rows, Z(0)));
    for (size_t i = 0; i < rows; i++) {
        for (size_t j = 0; j < n; j++) big[i][j] = a[i][j];
        big[i][n + i] = N;
    }
    ZMat ker = zmat_kernel(big);
    size_t k = ker.empty() ? 0 : ker[0].size();
    ZMat proj(n, ZVec(k, Z(0)));
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < k; j++) proj[i][j] = ker[i][j];
    return hnf_lower(proj);
}

Z zmat_det(const ZMat& a) {
    Q d = qmat_det(zmat_to_q(a));
    return znum(d);
}

bool hnf_solve(const ZMat& h, const ZVec& v, ZVec& x) {
    size_t n = h.size();
    x.assign(n, Z(0));
    ZVec rem = v;
    for (size_t i = 0; i < n; i++) {
        if (h[i][i] == 0) return false;
        if (rem[i] % h[i][i] != 0) return false;
        x[i] = rem[i] / h[i][i];
        for (size_t k = i; k < n; k++) rem[k] -= x[i] * h[k][i];
    }
    for (size_t i = 0; i < n; i++)
        if (rem[i] != 0) return false;
    return true;
}

bool hnf_contains(const ZMat& h, const ZVec& v) {
    ZVec x;
    return hnf_solve(h, v, x);
}

QMat zmat_to_q(const ZMat& a) {
    QMat r(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        r[i].resize(a[i].size());
        for (size_t j = 0; j < a[i].size(); j++) r[i][j] = Q(a[i][j]);
    }
    return r;
}

}  // namespace egr
