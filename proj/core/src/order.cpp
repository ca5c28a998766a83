#include <stdexcept>

#include "egr/modp.hpp"
#include "egr/numfield.hpp"
#include "egr/zmat.hpp"

namespace egr {

namespace {

// F_p linear algebra on small dense matrices (p < 2^31)
using FpMat = std::vector<std::vector<uint64_t>>;

std::vector<std::vector<uint64_t>> fpmat_kernel(FpMat m, uint64_t p) {
    size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
    std::vector<int> pivot_of_col(cols, -1);
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; c++) {
        size_t sel = r;
        while (sel < rows && m[sel][c] == 0) sel++;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        uint64_t inv = powmod_u64(m[r][c], p - 2, p);
        for (size_t j = c; j < cols; j++) m[r][j] = mulmod_u64(m[r][j], inv, p);
        for (size_t i = 0; i < rows; i++) {
            if (i != r && m[i][c]) {
                uint64_t f = m[i][c];
                for (size_t j = c; j < cols; j++)
                    m[i][j] = (m[i][j] + p - mulmod_u64(f, m[r][j], p)) % p;
            }
        }
        pivot_of_col[c] = (int)r;
        r++;
    }
    std::vector<std::vector<uint64_t>> basis;
    for (size_t fc = 0; fc < cols; fc++) {
        if (pivot_of_col[fc] >= 0) continue;
        std::vector<uint64_t> v(cols, 0);
        v[fc] = 1;
        for (size_t c = 0; c < cols; c++)
            if (pivot_of_col[c] >= 0) v[c] = (p - m[pivot_of_col[c]][fc]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

struct OrderCtx {
    NFPtr K0;  // helper field with trivial basis, used for power basis products
    int n;
    QMat B, Binv;  // current order basis over the power basis
    // structure constants: b_i * b_j in the current basis (integers)
    std::vector<std::vector<ZVec>> S;

    void rebuild() {
        Binv = [&] {
            QMat aug(n, QVec(2 * n, Q(0)));
            for (int i = 0; i < n; i++) {
                for (int j = 0; j < n; j++) aug[i][j] = B[i][j];
                aug[i][n + i] = 1;
            }
            qmat_rref(aug);
            QMat inv(n, QVec(n));
            for (int i = 0; i < n; i++)
                for (int j = 0; j < n; j++) inv[i][j] = aug[i][n + j];
            return inv;
        }();
        S.assign(n, std::vector<ZVec>(n));
        for (int i = 0; i < n; i++) {
            QVec bi(n);
            for (int k = 0; k < n; k++) bi[k] = B[k][i];
            NFElement ei(K0, bi);
            for (int j = i; j < n; j++) {
                QVec bj(n);
                for (int k = 0; k < n; k++) bj[k] = B[k][j];
                QVec prod = qmat_apply(Binv, (ei * NFElement(K0, bj)).a);
                ZVec zc(n);
                for (int k = 0; k < n; k++) {
                    if (!is_int(prod[k]))
                        throw std::domain_error("order structure constants not integral");
                    zc[k] = znum(prod[k]);
                }
                S[i][j] = zc;
                S[j][i] = std::move(zc);
            }
        }
    }

    std::vector<uint64_t> mul_mod_p(const std::vector<uint64_t>& x,
                                    const std::vector<uint64_t>& y, uint64_t p) const {
        std::vector<uint64_t> r(n, 0);
        for (int i = 0; i < n; i++) {
            if (!x[i]) continue;
            for (int j = 0; j < n; j++) {
                if (!y[j]) continue;
                uint64_t c = mulmod_u64(x[i], y[j], p);
                for (int k = 0; k < n; k++) {
                    Z s = S[i][j][k] % Z((unsigned long)p);
                    if (s < 0) s += Z((unsigned long)p);
                    r[k] = (r[k] + mulmod_u64(c, s.get_ui(), p)) % p;
                }
            }
        }
        return r;
    }

    // coordinates of 1 over the current basis, reduced mod p
    std::vector<uint64_t> one_mod_p(uint64_t p) const {
        QVec e0(n, Q(0));
        e0[0] = 1;
        QVec c = qmat_apply(Binv, e0);
        std::vector<uint64_t> r(n);
        for (int i = 0; i < n; i++) {
            if (!is_int(c[i])) throw std::domain_error("order does not contain 1");
            Z v = znum(c[i]) % Z((unsigned long)p);
            if (v < 0) v += Z((unsigned long)p);
            r[i] = v.get_ui();
        }
        return r;
    }

    std::vector<uint64_t> pow_mod_p(std::vector<uint64_t> x, Z e, uint64_t p) const {
        std::vector<uint64_t> r = one_mod_p(p);
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = mul_mod_p(r, x, p);
            x = mul_mod_p(x, x, p);
            e >>= 1;
        }
        return r;
    }
};

}  // namespace

QMat maximal_order_basis(const QPoly& f, Z& field_disc, Z& index) {
    int n = f.deg();
    for (const Q& c : f.c)
        if (!is_int(c)) throw std::domain_error("maximal_order_basis: f must be integral");
    Q discq = qpoly_discriminant(f);
    Z disc = znum(discq);
    if (disc == 0) throw std::domain_error("maximal_order_basis: f not squarefree");

    Z unfactored;
    auto fac = factor_integer(disc, unfactored);
    if (unfactored != 1) {
        Z sq;
        if (!perfect_square(unfactored, sq))
            throw std::runtime_error("maximal_order_basis: discriminant not factored");
        fac.push_back({sq, 2});  // conservative: treat the square root as a prime
    }

    OrderCtx ctx;
    // a bare field handle without maximal order machinery
    auto K0 = std::make_shared<NumberField>();
    K0->f = f.monic();
    K0->n = n;
    K0->ib = qmat_identity(n);
    K0->ib_inv = qmat_identity(n);
    ctx.K0 = K0;
    ctx.n = n;
    ctx.B = qmat_identity(n);
    ctx.rebuild();

    for (auto& [pz, e] : fac) {
        if (e < 2) continue;
        if (!pz.fits_ulong_p()) throw std::runtime_error("maximal_order_basis: huge prime");
        uint64_t p = pz.get_ui();
        while (true) {
            // radical of pO: kernel of x -> x^(p^m), p^m >= n
            Z pm = 1;
            while (pm < n) pm *= Z((unsigned long)p);
            FpMat frob(n, std::vector<uint64_t>(n, 0));
            for (int j = 0; j < n; j++) {
                std::vector<uint64_t> ej(n, 0);
                ej[j] = 1;
                auto fj = ctx.pow_mod_p(ej, pm, p);
                for (int i = 0; i < n; i++) frob[i][j] = fj[i];
            }
            auto ker = fpmat_kernel(frob, p);
            // radical lattice over the current basis
            ZMat rad(n, ZVec(ker.size() + n, Z(0)));
            for (size_t c = 0; c < ker.size(); c++)
                for (int i = 0; i < n; i++) rad[i][c] = Z((unsigned long)ker[c][i]);
            for (int i = 0; i < n; i++) rad[i][ker.size() + i] = Z((unsigned long)p);
            ZMat Hr = hnf_lower(rad);
            QMat HrInvQ = [&] {
                QMat aug(n, QVec(2 * n, Q(0)));
                for (int i = 0; i < n; i++) {
                    for (int j = 0; j < n; j++) aug[i][j] = Q(Hr[i][j]);
                    aug[i][n + i] = 1;
                }
                qmat_rref(aug);
                QMat inv(n, QVec(n));
                for (int i = 0; i < n; i++)
                    for (int j = 0; j < n; j++) inv[i][j] = aug[i][n + j];
                return inv;
            }();
            // multiplier ring (R : R) inside (1/p) O
            FpMat cond;
            for (int j = 0; j < n; j++) {
                // multiplication by the j-th radical basis vector
                QMat Mj(n, QVec(n, Q(0)));
                for (int i = 0; i < n; i++) {
                    ZVec acc(n, Z(0));
                    for (int k = 0; k < n; k++)
                        if (Hr[k][j] != 0)
                            for (int l = 0; l < n; l++) acc[l] += Hr[k][j] * ctx.S[k][i][l];
                    for (int l = 0; l < n; l++) Mj[l][i] = Q(acc[l]);
                }
                QMat Aj = qmat_mul(HrInvQ, Mj);
                for (int r = 0; r < n; r++) {
                    std::vector<uint64_t> row(n);
                    for (int cidx = 0; cidx < n; cidx++) {
                        if (!is_int(Aj[r][cidx]))
                            throw std::runtime_error("multiplier ring: non integral data");
                        Z v = znum(Aj[r][cidx]) % Z((unsigned long)p);
                        if (v < 0) v += Z((unsigned long)p);
                        row[cidx] = v.get_ui();
                    }
                    cond.push_back(std::move(row));
                }
            }
            auto yker = fpmat_kernel(cond, p);
            if (yker.empty()) break;  // no enlargement possible? verify below
            // candidate enlargement: columns p*I plus kernel lifts, all over p
            ZMat gen(n, ZVec(n + yker.size(), Z(0)));
            for (int i = 0; i < n; i++) gen[i][i] = Z((unsigned long)p);
            for (size_t c = 0; c < yker.size(); c++)
                for (int i = 0; i < n; i++) gen[i][n + c] = Z((unsigned long)yker[c][i]);
            ZMat H = hnf_lower(gen);
            Z det = 1;
            for (int i = 0; i < n; i++) det *= H[i][i];
            if (det == zpow(Z((unsigned long)p), n)) break;  // unchanged
            // new basis over the power basis: B * (H / p)
            QMat Hq(n, QVec(n));
            for (int i = 0; i < n; i++)
                for (int j = 0; j < n; j++) Hq[i][j] = Q(H[i][j]) / Q((unsigned long)p);
            ctx.B = qmat_mul(ctx.B, Hq);
            ctx.rebuild();
        }
    }

    // discriminant of the final order via the trace form
    QMat T(n, QVec(n));
    for (int i = 0; i < n; i++) {
        QVec bi(n);
        for (int k = 0; k < n; k++) bi[k] = ctx.B[k][i];
        NFElement ei(ctx.K0, bi);
        for (int j = 0; j < n; j++) {
            QVec bj(n);
            for (int k = 0; k < n; k++) bj[k] = ctx.B[k][j];
            T[i][j] = (ei * NFElement(ctx.K0, bj)).trace();
        }
    }
    Q d = qmat_det(T);
    if (!is_int(d)) throw std::runtime_error("maximal order: discriminant not integral");
    field_disc = znum(d);
    Q idx2 = discq / d;
    Q idx;
    if (!rational_square(idx2, idx) || !is_int(idx))
        throw std::runtime_error("maximal order: index not a square");
    index = znum(idx);
    return ctx.B;
}

}  // namespace egr
