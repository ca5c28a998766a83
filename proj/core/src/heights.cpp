#include "egr/heights.hpp"

#include <optional>
#include <stdexcept>

namespace egr {

namespace {

constexpr unsigned kMaxPrec = 1u << 15;

// conjugates of the algebraic integer d*x, reals first, complex pairs adjacent
std::vector<CBall> conjugates_scaled(const NFElement& x, const Z& d, unsigned prec) {
    auto emb = x.embed(prec);
    NFPtr K = x.K;
    std::vector<CBall> out;
    RBall dz(mpf_class(Q(d), prec + 32));
    CBall dc(dz, RBall(mpf_class(0, prec + 32)));
    for (int v = 0; v < K->r1; v++) out.push_back(emb[v] * dc);
    for (int v = 0; v < K->r2; v++) {
        CBall z = emb[K->r1 + v] * dc;
        out.push_back(z);
        out.push_back(z.conj());
    }
    return out;
}

std::vector<int> subset_conj_indices(NFPtr K, const std::vector<bool>& in_set) {
    std::vector<int> idx;
    for (int v = 0; v < K->r1; v++)
        if (in_set[v]) idx.push_back(v);
    for (int v = 0; v < K->r2; v++)
        if (in_set[K->r1 + v]) {
            idx.push_back(K->r1 + 2 * v);
            idx.push_back(K->r1 + 2 * v + 1);
        }
    return idx;
}

// q_k(T) = prod over all k element subsets A of the conjugates of (T - prod A),
// an integer polynomial; nullopt when the precision cannot pin the coefficients
std::optional<std::vector<Z>> subset_product_poly(const std::vector<CBall>& y, int k) {
    int n = (int)y.size();
    unsigned prec = y[0].re.prec();
    // all subset products of size k
    std::vector<CBall> prods;
    std::vector<int> sel(k);
    for (int i = 0; i < k; i++) sel[i] = i;
    while (true) {
        CBall p(RBall(mpf_class(1, prec)), RBall(mpf_class(0, prec)));
        for (int i : sel) p = p * y[i];
        prods.push_back(p);
        int i = k - 1;
        while (i >= 0 && sel[i] == n - k + i) i--;
        if (i < 0) break;
        sel[i]++;
        for (int j = i + 1; j < k; j++) sel[j] = sel[j - 1] + 1;
    }
    // expand the monic polynomial with these roots
    std::vector<CBall> coeff{CBall(RBall(mpf_class(1, prec)), RBall(mpf_class(0, prec)))};
    for (const CBall& r : prods) {
        std::vector<CBall> next(coeff.size() + 1,
                                CBall(RBall(mpf_class(0, prec)), RBall(mpf_class(0, prec))));
        for (size_t i = 0; i < coeff.size(); i++) {
            next[i + 1] = next[i + 1] + coeff[i];
            next[i] = next[i] - coeff[i] * r;
        }
        coeff = std::move(next);
    }
    // coeff is already ordered low to high
    std::vector<Z> out(coeff.size());
    for (size_t i = 0; i < coeff.size(); i++) {
        const CBall& c = coeff[i];
        if (!c.im.contains_zero()) return std::nullopt;
        mpf_class lo = c.re.c - c.re.r, hi = c.re.c + c.re.r;
        Z zlo, zhi;
        mpz_set_f(zlo.get_mpz_t(), mpf_class(ceil(lo)).get_mpf_t());
        mpz_set_f(zhi.get_mpz_t(), mpf_class(floor(hi)).get_mpf_t());
        if (zlo != zhi) return std::nullopt;
        out[i] = zlo;
    }
    return out;
}

// lower bound on the distance from sigma to the other roots of q (integer poly)
Q root_gap_at(const std::vector<Z>& q, const Q& sigma) {
    QPoly s = squarefree_part(qpoly_from_z(q));
    QPoly lin({-sigma, Q(1)});
    QPoly u, rem;
    qpoly_divrem(s, lin, u, rem);
    if (!rem.is_zero()) throw std::logic_error("root_gap_at: sigma not a root");
    // roots of u(T + sigma) are the nonzero differences
    QPoly w = u.shift_arg(sigma);
    Q a0 = abs(w.coeff(0));
    if (a0 == 0) throw std::logic_error("root_gap_at: repeated root after squarefree part");
    Q m = 0;
    for (int i = 1; i <= w.deg(); i++)
        if (abs(w.coeff(i)) > m) m = abs(w.coeff(i));
    if (m == 0) return Q(1);
    Q g = a0 / (a0 + m);
    return g < 1 ? g : Q(1);
}

// exact comparison of prod over the subset of |y_i| with tau > 0;
// in_set marks archimedean places of K (complex places contribute both
// conjugates), k is the number of conjugates involved
int cmp_abs_subset(const NFElement& x, const Z& d, const std::vector<bool>& in_set,
                   const Q& tau) {
    NFPtr K = x.K;
    auto idx = subset_conj_indices(K, in_set);
    int k = (int)idx.size();
    if (k == 0) {
        if (Q(1) < tau) return -1;
        if (Q(1) > tau) return 1;
        return 0;
    }
    for (unsigned prec = 192; prec <= kMaxPrec; prec *= 2) {
        auto y = conjugates_scaled(x, d, prec);
        RBall A(mpf_class(1, prec + 32));
        for (int i : idx) A = A * y[i].abs_ball();
        if (A.gt(tau)) return 1;
        if (A.lt(tau)) return -1;
        // tie suspected; P = signed product, a root of the subset polynomial
        CBall P(RBall(mpf_class(1, prec + 32)), RBall(mpf_class(0, prec + 32)));
        for (int i : idx) P = P * y[i];
        if (!P.im.contains_zero())
            throw std::logic_error("cmp_abs_subset: product not real");
        if (P.re.contains_zero()) continue;  // refine to get the sign
        Q sigma = P.re.c > 0 ? tau : -tau;
        auto qk = subset_product_poly(y, k);
        if (!qk) continue;
        // exact evaluation at sigma
        Q val = 0;
        for (size_t i = qk->size(); i-- > 0;) val = val * sigma + Q((*qk)[i]);
        if (val != 0) continue;  // P != sigma, refining will separate
        Q gap = root_gap_at(*qk, sigma);
        RBall diff = P.re - RBall(sigma, prec + 32);
        if (diff.contains_zero() && diff.r < mpf_class(gap / 2, prec + 32)) return 0;
    }
    throw std::runtime_error("cmp_abs_subset: precision limit reached");
}

}  // namespace

std::vector<int> archimedean_compare_one(const NFElement& x) {
    NFPtr K = x.K;
    std::vector<int> out;
    if (x.is_zero()) {
        out.assign(K->r1 + K->r2, -1);
        return out;
    }
    Z d = x.denominator();
    for (int v = 0; v < K->r1 + K->r2; v++) {
        std::vector<bool> s(K->r1 + K->r2, false);
        s[v] = true;
        Q tau = v < K->r1 ? Q(d) : Q(d * d);
        out.push_back(cmp_abs_subset(x, d, s, tau));
    }
    return out;
}

Z height_denominator_norm(const NFElement& x) {
    if (x.is_zero()) return Z(1);
    Ideal num, den;
    numerator_denominator(x, num, den);
    return den.lattice_norm();
}

RBall height_ball(const NFElement& x, unsigned prec) {
    if (x.is_zero()) return RBall(mpf_class(1, prec));
    Z nb = height_denominator_norm(x);
    auto emb = x.embed(prec);
    NFPtr K = x.K;
    RBall H(mpf_class(Q(nb), prec));
    auto w = K->embedding_weights();
    for (size_t v = 0; v < emb.size(); v++) {
        RBall av = emb[v].abs_ball();
        if (w[v] == 2) av = av * av;
        mpf_class lo = av.c - av.r, hi = av.c + av.r;
        if (hi <= 1) continue;  // max is 1
        if (lo < 1) {
            // straddles 1: contribute [1, hi]
            av = RBall((1 + hi) / 2, (hi - 1) / 2);
        }
        H = H * av;
    }
    return H;
}

int height_compare(const NFElement& x, const Q& B) {
    if (B <= 0) throw std::domain_error("height_compare: bound must be positive");
    if (x.is_zero()) {
        if (Q(1) < B) return -1;
        return Q(1) > B ? 1 : 0;
    }
    if (x.is_rational()) {
        Q v = x.a[0];
        Z p = abs(znum(v)), q = zden(v);
        Q h = qpow(Q(p > q ? p : q), x.K->n);
        if (h < B) return -1;
        return h > B ? 1 : 0;
    }
    NFPtr K = x.K;
    Z nb = height_denominator_norm(x);
    Z d = x.denominator();
    auto cls = archimedean_compare_one(x);
    std::vector<bool> E(cls.size(), false);
    int k = 0;
    auto w = K->embedding_weights();
    for (size_t v = 0; v < cls.size(); v++)
        if (cls[v] > 0) {
            E[v] = true;
            k += w[v];
        }
    if (k == 0) {
        Q h(nb);
        if (h < B) return -1;
        return h > B ? 1 : 0;
    }
    Q tau = B * qpow(Q(d), k) / Q(nb);
    return cmp_abs_subset(x, d, E, tau);
}

bool height_exact_rational(const NFElement& x, Q& out) {
    if (x.is_zero()) {
        out = 1;
        return true;
    }
    if (x.is_rational()) {
        Q v = x.a[0];
        Z p = abs(znum(v)), q = zden(v);
        out = qpow(Q(p > q ? p : q), x.K->n);
        return true;
    }
    NFPtr K = x.K;
    Z nb = height_denominator_norm(x);
    Z d = x.denominator();
    auto cls = archimedean_compare_one(x);
    std::vector<bool> E(cls.size(), false);
    int k = 0;
    auto w = K->embedding_weights();
    for (size_t v = 0; v < cls.size(); v++)
        if (cls[v] > 0) {
            E[v] = true;
            k += w[v];
        }
    if (k == 0) {
        out = Q(nb);
        return true;
    }
    // candidate integer value of the conjugate subset product
    auto y = conjugates_scaled(x, d, 256);
    auto idx = subset_conj_indices(K, E);
    RBall A(mpf_class(1, 256));
    for (int i : idx) A = A * y[i].abs_ball();
    Z m;
    mpf_class mid = A.c;
    mpz_set_f(m.get_mpz_t(), mpf_class(floor(mid + mpf_class(0.5))).get_mpf_t());
    if (m <= 0) return false;
    if (cmp_abs_subset(x, d, E, Q(m)) != 0) return false;
    out = Q(nb) * Q(m) / qpow(Q(d), k);
    return true;
}

}  // namespace egr
