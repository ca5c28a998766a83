#include "egr/zfactor.hpp"

#include <stdexcept>

#include "egr/modp.hpp"

namespace egr {

std::vector<std::pair<QPoly, int>> qpoly_squarefree_decomp(const QPoly& f_in) {
    std::vector<std::pair<QPoly, int>> out;
    QPoly f = f_in.monic();
    if (f.deg() < 1) return out;
    QPoly d = f.derivative();
    QPoly a = qpoly_gcd(f, d);
    QPoly b, c, q, r;
    qpoly_divrem(f, a, b, r);
    qpoly_divrem(d, a, c, r);
    c = c - b.derivative();
    int i = 1;
    while (b.deg() > 0) {
        QPoly g = qpoly_gcd(b, c);
        if (g.deg() > 0) out.push_back({g.monic(), i});
        qpoly_divrem(b, g, q, r);
        b = q;
        qpoly_divrem(c, g, q, r);
        c = q - b.derivative();
        i++;
    }
    return out;
}

namespace {

// Polynomials with Z coefficients reduced into [0, m).
using ZmPoly = std::vector<Z>;

ZmPoly zm_reduce(const std::vector<Z>& a, const Z& m) {
    ZmPoly r(a.size());
    for (size_t i = 0; i < a.size(); i++) {
        r[i] = a[i] % m;
        if (r[i] < 0) r[i] += m;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Z& m) {
    if (a.empty() || b.empty()) return {};
    ZmPoly r(a.size() + b.size() - 1, Z(0));
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
    return zm_reduce(r, m);
}

ZmPoly zm_add_scaled(const ZmPoly& a, const ZmPoly& b, const Z& s, const Z& m) {
    ZmPoly r(std::max(a.size(), b.size()), Z(0));
    for (size_t i = 0; i < a.size(); i++) r[i] = a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] += s * b[i];
    return zm_reduce(r, m);
}

ZmPoly zm_from_fp(const FpPoly& f) {
    ZmPoly r(f.c.size());
    for (size_t i = 0; i < f.c.size(); i++) r[i] = Z((unsigned long)f.c[i]);
    return r;
}

FpPoly fp_from_zm(const ZmPoly& f, uint64_t p) { return fp_from_z(f, p); }

// Lift G = g*h from mod p^j to mod p^K, g and h monic, with Bezout data mod p.
void hensel_pair(const std::vector<Z>& G, ZmPoly& g, ZmPoly& h, const FpPoly& u,
                 const FpPoly& v, uint64_t p, int K) {
    Z pj((unsigned long)p);
    Z P((unsigned long)p);
    for (int j = 1; j < K; j++) {
        Z pj1 = pj * P;
        // e = (G - g h)/p^j mod p
        ZmPoly gh = zm_mul(g, h, pj1);
        std::vector<Z> diff(std::max(G.size(), gh.size()), Z(0));
        for (size_t i = 0; i < G.size(); i++) diff[i] = G[i];
        for (size_t i = 0; i < gh.size(); i++) diff[i] -= gh[i];
        std::vector<Z> e(diff.size());
        for (size_t i = 0; i < diff.size(); i++) {
            Z q = diff[i] % pj1;
            if (q < 0) q += pj1;
            e[i] = q / pj;
        }
        FpPoly ep = fp_from_z(e, p);
        FpPoly gp = fp_from_zm(g, p), hp = fp_from_zm(h, p);
        FpPoly dg = fp_rem(fp_mul(v, ep), gp);
        FpPoly dh = fp_rem(fp_mul(u, ep), hp);
        g = zm_add_scaled(g, zm_from_fp(dg), pj, pj1);
        h = zm_add_scaled(h, zm_from_fp(dh), pj, pj1);
        pj = pj1;
    }
}

// Recursive tree lift of a list of monic factors of monic G mod p to mod p^K.
void hensel_tree(const std::vector<Z>& G, const std::vector<FpPoly>& facs,
                 size_t lo, size_t hi, uint64_t p, int K, std::vector<ZmPoly>& out) {
    if (hi - lo == 1) {
        Z pk = zpow(Z((unsigned long)p), K);
        out[lo] = zm_reduce(G, pk);
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    FpPoly gp(p, {1}), hp(p, {1});
    for (size_t i = lo; i < mid; i++) gp = fp_mul(gp, facs[i]);
    for (size_t i = mid; i < hi; i++) hp = fp_mul(hp, facs[i]);
    // Bezout: u g + v h = 1 mod p
    FpPoly a = gp, b = hp;
    FpPoly ua(p, {1}), ub(p), va(p), vb(p, {1});
    while (!b.is_zero()) {
        FpPoly q, r;
        fp_divrem(a, b, q, r);
        FpPoly un = fp_sub(ua, fp_mul(q, ub));
        FpPoly vn = fp_sub(va, fp_mul(q, vb));
        a = b; b = r;
        ua = ub; ub = un;
        va = vb; vb = vn;
    }
    // a = gcd = constant c: scale so that ua*g + va*h = 1
    uint64_t cinv = powmod_u64(a.c[0], p - 2, p);
    FpPoly u = fp_scal(ua, cinv), v = fp_scal(va, cinv);
    ZmPoly g = zm_from_fp(gp), h = zm_from_fp(hp);
    hensel_pair(G, g, h, u, v, p, K);
    std::vector<Z> gz(g.begin(), g.end()), hz(h.begin(), h.end());
    hensel_tree(gz, facs, lo, mid, p, K, out);
    hensel_tree(hz, facs, mid, hi, p, K, out);
}

bool divides_exactly(const QPoly& g, const QPoly& f, QPoly& quo) {
    QPoly r;
    qpoly_divrem(f, g, quo, r);
    return r.is_zero();
}

// Factor a monic squarefree polynomial with integer coefficients.
std::vector<QPoly> factor_monic_squarefree(const std::vector<Z>& F) {
    QPoly f = qpoly_from_z(F);
    std::vector<QPoly> out;
    if (f.deg() == 1) {
        out.push_back(f);
        return out;
    }
    // pick a prime keeping f squarefree mod p
    uint64_t p = 10007;
    FpPoly fp;
    for (;; p = next_prime_u64(p)) {
        fp = fp_from_z(F, p);
        if (fp.deg() == f.deg() && fp_squarefree(fp)) break;
    }
    auto modfac = fp_factor(fp);
    std::vector<FpPoly> facs;
    for (auto& [g, e] : modfac)
        for (int i = 0; i < e; i++) facs.push_back(g);
    if (facs.size() == 1) {
        out.push_back(f);
        return out;
    }
    // lift precision: p^K > 2 * 2^n * max |coeff|
    Z maxc = 0;
    for (const Z& a : F) if (abs(a) > maxc) maxc = abs(a);
    Z bound = (maxc + 1) * zpow(Z(2), f.deg() + 2);
    int K = 1;
    Z pk((unsigned long)p);
    while (pk <= bound) { pk *= Z((unsigned long)p); K++; }
    std::vector<ZmPoly> lifted(facs.size());
    hensel_tree(F, facs, 0, facs.size(), p, K, lifted);

    auto sym = [&pk](const ZmPoly& a) {
        std::vector<Q> r(a.size());
        for (size_t i = 0; i < a.size(); i++) {
            Z v = a[i];
            if (2 * v > pk) v -= pk;
            r[i] = Q(v);
        }
        return QPoly(std::move(r));
    };

    // Subset recombination: any true factor of f corresponds to a subset of
    // the lifted modular factors.  Test subsets of size up to half the pool;
    // whatever remains at the end is irreducible.
    QPoly rem_f = f;
    std::vector<bool> used(lifted.size(), false);
    for (size_t card = 1;; card++) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < lifted.size(); i++)
            if (!used[i]) idx.push_back(i);
        if (2 * card > idx.size()) break;
        std::vector<size_t> sel(card);
        for (size_t i = 0; i < card; i++) sel[i] = i;
        while (true) {
            ZmPoly prod{Z(1)};
            for (size_t i : sel) prod = zm_mul(prod, lifted[idx[i]], pk);
            QPoly cand = sym(prod);
            QPoly quo;
            if (cand.deg() >= 1 && divides_exactly(cand, rem_f, quo)) {
                out.push_back(cand);
                rem_f = quo;
                for (size_t i : sel) used[idx[i]] = true;
                idx.clear();
                for (size_t i = 0; i < lifted.size(); i++)
                    if (!used[i]) idx.push_back(i);
                if (2 * card > idx.size()) break;
                for (size_t i = 0; i < card; i++) sel[i] = i;
                continue;
            }
            bool advanced = false;
            for (size_t i = card; i-- > 0;) {
                if (sel[i] < idx.size() - (card - i)) {
                    sel[i]++;
                    for (size_t j = i + 1; j < card; j++) sel[j] = sel[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
    if (rem_f.deg() >= 1) out.push_back(rem_f);
    return out;
}

}  // namespace

std::vector<std::pair<QPoly, int>> qpoly_factor(const QPoly& f_in) {
    std::vector<std::pair<QPoly, int>> out;
    if (f_in.deg() < 1) return out;
    for (auto& [sq, mult] : qpoly_squarefree_decomp(f_in)) {
        // make the squarefree piece integral and monic via x -> x/den scaling
        Z den;
        std::vector<Z> zc = qpoly_primitive_z(sq, den);
        QPoly zpoly = qpoly_from_z(zc);
        Z l = zc.back();
        QPoly work;
        Q lscale(1);
        if (l == 1) {
            work = zpoly;
        } else {
            // monicize: l^(n-1) * f(x/l)
            lscale = Q(l);
            work = zpoly.scale_arg(Q(1) / Q(l)) * qpow(Q(l), zpoly.deg() - 1);
        }
        Z d2;
        std::vector<Z> wz = qpoly_primitive_z(work, d2);
        if (d2 != 1 || !qpoly_from_z(wz).is_monic()) {
            // fallback path: keep exact monic rational poly and scale content in
            wz.clear();
            for (auto& q : work.c) wz.push_back(znum(q));
        }
        for (QPoly g : factor_monic_squarefree(wz)) {
            if (lscale != 1) g = g.scale_arg(lscale);
            out.push_back({g.monic(), mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.first.deg() < b.first.deg();
    });
    return out;
}

bool qpoly_irreducible(const QPoly& f) {
    if (f.deg() < 1) return false;
    auto fac = qpoly_factor(f);
    return fac.size() == 1 && fac[0].second == 1 && fac[0].first.deg() == f.deg();
}

}  // namespace egr
