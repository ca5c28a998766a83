#include "egr/lattice.hpp"

#include <cmath>
#include <stdexcept>

namespace egr {

namespace {

Q round_q(const Q& v) {
    Z num = znum(v), den = zden(v);
    Z twice = 2 * num + den;  // floor(v + 1/2) = floor((2 num + den) / (2 den))
    Z q;
    Z den2 = 2 * den;
    mpz_fdiv_q(q.get_mpz_t(), twice.get_mpz_t(), den2.get_mpz_t());
    return Q(q);
}

struct GSO {
    int n;
    std::vector<QVec> mu;  // mu[i][j], j < i
    QVec B;                // squared lengths of the orthogonalized vectors

    void compute(const QMat& G) {
        n = (int)G.size();
        mu.assign(n, QVec(n, Q(0)));
        B.assign(n, Q(0));
        for (int i = 0; i < n; i++) {
            for (int j = 0; j < i; j++) {
                Q s = G[i][j];
                for (int k = 0; k < j; k++) s -= mu[i][k] * mu[j][k] * B[k];
                if (B[j] == 0) throw std::domain_error("GSO: degenerate Gram matrix");
                mu[i][j] = s / B[j];
            }
            Q s = G[i][i];
            for (int k = 0; k < i; k++) s -= mu[i][k] * mu[i][k] * B[k];
            B[i] = s;
        }
    }
};

QMat transformed_gram(const QMat& G0, const ZMat& U) {
    int n = (int)G0.size();
    QMat G(n, QVec(n, Q(0)));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            Q s = 0;
            for (int a = 0; a < n; a++) {
                if (U[a][i] == 0) continue;
                Q t = 0;
                for (int b = 0; b < n; b++)
                    if (U[b][j] != 0) t += G0[a][b] * Q(U[b][j]);
                s += Q(U[a][i]) * t;
            }
            G[i][j] = s;
        }
    return G;
}

}  // namespace

void lll_gram(QMat& G, ZMat& U, const Q& delta) {
    int n = (int)G.size();
    const QMat G0 = G;
    U = zmat_identity(n);
    GSO gso;
    gso.compute(G);
    int k = 1;
    int guard = 0;
    while (k < n) {
        if (++guard > 100000) throw std::runtime_error("lll_gram: no convergence");
        // size reduce column k
        for (int j = k - 1; j >= 0; j--) {
            Q q = round_q(gso.mu[k][j]);
            if (q != 0) {
                Z qz = znum(q);
                for (int i = 0; i < n; i++) U[i][k] -= qz * U[i][j];
                G = transformed_gram(G0, U);
                gso.compute(G);
            }
        }
        if (gso.B[k] >= (delta - gso.mu[k][k - 1] * gso.mu[k][k - 1]) * gso.B[k - 1]) {
            k++;
        } else {
            for (int i = 0; i < n; i++) std::swap(U[i][k], U[i][k - 1]);
            G = transformed_gram(G0, U);
            gso.compute(G);
            k = std::max(1, k - 1);
        }
    }
    G = transformed_gram(G0, U);
}

void fincke_pohst(const QMat& G, const Q& C,
                  const std::function<bool(const std::vector<Z>&, const Q&)>& cb) {
    int n = (int)G.size();
    GSO gso;
    gso.compute(G);
    for (int i = 0; i < n; i++)
        if (gso.B[i] <= 0) throw std::domain_error("fincke_pohst: form not positive definite");
    std::vector<Z> x(n, Z(0));
    // levels from n-1 down to 0; at level i the remaining budget is T[i]
    std::function<bool(int, const Q&, bool)> rec = [&](int i, const Q& T, bool all_zero_above) {
        if (i < 0) {
            bool nonzero = false;
            for (const Z& v : x)
                if (v != 0) nonzero = true;
            if (!nonzero) return true;
            return cb(x, C - T);
        }
        Q c = 0;
        for (int j = i + 1; j < n; j++) c += gso.mu[j][i] * Q(x[j]);
        Q s2 = T / gso.B[i];
        double capprox = c.get_d();
        double sapprox = std::sqrt(std::max(0.0, s2.get_d()));
        long lo = (long)std::floor(-capprox - sapprox) - 2;
        long hi = (long)std::ceil(-capprox + sapprox) + 2;
        auto val = [&](long xv) -> Q {
            Q t = Q(xv) + c;
            return Q(t * t * gso.B[i]);
        };
        while (lo <= hi && val(lo) > T) lo++;
        while (hi >= lo && val(hi) > T) hi--;
        long start = all_zero_above ? std::max(0L, lo) : lo;
        for (long xv = start; xv <= hi; xv++) {
            x[i] = xv;
            if (!rec(i - 1, T - val(xv), all_zero_above && xv == 0)) return false;
        }
        x[i] = 0;
        return true;
    };
    rec(n - 1, C, true);
}

}  // namespace egr
