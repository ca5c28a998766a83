#include "egr/modp.hpp"

#include <stdexcept>

namespace egr {

static uint64_t inv_mod(uint64_t a, uint64_t p) { return powmod_u64(a, p - 2, p); }

FpPoly fp_from_z(const std::vector<Z>& coeffs, uint64_t p) {
    FpPoly f(p);
    f.c.resize(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); i++) {
        Z r = coeffs[i] % Z((unsigned long)p);
        if (r < 0) r += Z((unsigned long)p);
        f.c[i] = r.get_ui();
    }
    f.trim();
    return f;
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b) {
    FpPoly r(a.p);
    r.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); i++) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) r.c[i] = (r.c[i] + b.c[i]) % a.p;
    r.trim();
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
    FpPoly r(a.p);
    r.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); i++) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); i++) r.c[i] = (r.c[i] + a.p - b.c[i]) % a.p;
    r.trim();
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    FpPoly r(a.p);
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); i++) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); j++)
            r.c[i + j] = (r.c[i + j] + mulmod_u64(a.c[i], b.c[j], a.p)) % a.p;
    }
    r.trim();
    return r;
}

FpPoly fp_scal(const FpPoly& a, uint64_t s) {
    FpPoly r = a;
    for (auto& v : r.c) v = mulmod_u64(v, s % a.p, a.p);
    r.trim();
    return r;
}

void fp_divrem(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
    if (b.is_zero()) throw std::domain_error("fp_divrem by zero");
    uint64_t p = a.p;
    r = a;
    q = FpPoly(p);
    if (a.deg() < b.deg()) return;
    q.c.assign(a.deg() - b.deg() + 1, 0);
    uint64_t binv = inv_mod(b.lc(), p);
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int k = r.deg() - b.deg();
        uint64_t f = mulmod_u64(r.lc(), binv, p);
        q.c[k] = f;
        for (int i = 0; i <= b.deg(); i++)
            r.c[i + k] = (r.c[i + k] + p - mulmod_u64(f, b.c[i], p)) % p;
        r.trim();
    }
}

FpPoly fp_rem(const FpPoly& a, const FpPoly& b) {
    FpPoly q, r;
    fp_divrem(a, b, q, r);
    return r;
}

FpPoly fp_monic(const FpPoly& a) {
    if (a.is_zero()) return a;
    return fp_scal(a, inv_mod(a.lc(), a.p));
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = fp_rem(a, b);
        a = b;
        b = r;
    }
    return fp_monic(a);
}

FpPoly fp_derivative(const FpPoly& a) {
    FpPoly r(a.p);
    if (a.c.size() <= 1) return r;
    r.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); i++) r.c[i - 1] = mulmod_u64(a.c[i], i % a.p, a.p);
    r.trim();
    return r;
}

FpPoly fp_powmod(const FpPoly& base, const Z& e, const FpPoly& mod) {
    FpPoly r(base.p, {1});
    FpPoly b = fp_rem(base, mod);
    Z n = e;
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) r = fp_rem(fp_mul(r, b), mod);
        b = fp_rem(fp_mul(b, b), mod);
        n >>= 1;
    }
    return r;
}

uint64_t fp_eval(const FpPoly& a, uint64_t x) {
    uint64_t r = 0;
    for (size_t i = a.c.size(); i-- > 0;) r = (mulmod_u64(r, x, a.p) + a.c[i]) % a.p;
    return r;
}

bool fp_squarefree(const FpPoly& f) {
    if (f.deg() <= 1) return true;
    FpPoly d = fp_derivative(f);
    if (d.is_zero()) return false;
    return fp_gcd(f, d).deg() == 0;
}

std::vector<std::pair<FpPoly, int>> fp_ddf(const FpPoly& f_in) {
    FpPoly f = fp_monic(f_in);
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly x(f.p, {0, 1});
    FpPoly h = x;  // x^(p^d) mod f, built up
    int d = 0;
    while (f.deg() > 0) {
        d++;
        if (2 * d > f.deg()) {
            out.push_back({f, f.deg()});
            break;
        }
        h = fp_powmod(h, Z((unsigned long)f.p), f);
        FpPoly g = fp_gcd(fp_sub(h, x), f);
        if (g.deg() > 0) {
            out.push_back({g, d});
            FpPoly q, r;
            fp_divrem(f, g, q, r);
            f = q;
            h = fp_rem(h, f);
        }
    }
    return out;
}

std::vector<int> fp_factor_degrees(const FpPoly& f) {
    std::vector<int> degs;
    for (auto& [g, d] : fp_ddf(f))
        for (int i = 0; i < g.deg() / d; i++) degs.push_back(d);
    std::sort(degs.begin(), degs.end());
    return degs;
}

// Cantor-Zassenhaus split of a product of irreducibles all of degree d.
static void fp_edf(const FpPoly& f, int d, std::vector<FpPoly>& out, uint64_t& seed) {
    if (f.deg() == d) {
        out.push_back(fp_monic(f));
        return;
    }
    uint64_t p = f.p;
    while (true) {
        seed = seed * 6364136223846793005ull + 1442695040888963407ull;
        FpPoly a(p);
        a.c.resize(f.deg());
        uint64_t s = seed;
        for (auto& v : a.c) {
            s = s * 6364136223846793005ull + 1442695040888963407ull;
            v = (s >> 16) % p;
        }
        a.trim();
        if (a.deg() < 1) continue;
        FpPoly g = fp_gcd(a, f);
        if (g.deg() == 0) {
            if (p == 2) {
                // trace map x + x^2 + ... + x^(2^(d-1)) applied to a
                FpPoly t = a, cur = a;
                for (int i = 1; i < d; i++) {
                    cur = fp_rem(fp_mul(cur, cur), f);
                    t = fp_add(t, cur);
                }
                g = fp_gcd(t, f);
            } else {
                Z e = (zpow(Z((unsigned long)p), d) - 1) / 2;
                FpPoly b = fp_powmod(a, e, f);
                b = fp_sub(b, FpPoly(p, {1}));
                g = fp_gcd(b, f);
            }
        }
        if (g.deg() > 0 && g.deg() < f.deg()) {
            FpPoly q, r;
            fp_divrem(f, g, q, r);
            fp_edf(g, d, out, seed);
            fp_edf(q, d, out, seed);
            return;
        }
    }
}

std::vector<std::pair<FpPoly, int>> fp_factor(const FpPoly& f_in, uint64_t seed) {
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly f = fp_monic(f_in);
    if (f.deg() < 1) return out;
    uint64_t p = f.p;
    // peel off p-th power parts via squarefree decomposition
    std::vector<std::pair<FpPoly, int>> sqf;  // (squarefree piece, multiplicity)
    std::vector<std::pair<FpPoly, int>> work{{f, 1}};
    while (!work.empty()) {
        auto [g, mult] = work.back();
        work.pop_back();
        if (g.deg() < 1) continue;
        FpPoly d = fp_derivative(g);
        if (d.is_zero()) {
            // g = h(x^p); p-th root by exponent division
            FpPoly h(p);
            h.c.resize(g.deg() / p + 1);
            for (size_t i = 0; i < h.c.size(); i++) h.c[i] = g.c[i * p];
            h.trim();
            work.push_back({h, mult * (int)p});
            continue;
        }
        FpPoly c0 = fp_gcd(g, d);
        FpPoly w, r;
        fp_divrem(g, c0, w, r);
        int m = mult;
        while (w.deg() > 0) {
            FpPoly y = fp_gcd(w, c0);
            FpPoly piece, r2;
            fp_divrem(w, y, piece, r2);
            if (piece.deg() > 0) sqf.push_back({piece, m});
            FpPoly q2;
            fp_divrem(c0, y, q2, r2);
            c0 = q2;
            w = y;
            m += mult;
        }
        if (c0.deg() > 0) work.push_back({c0, mult});
    }
    for (auto& [g, mult] : sqf) {
        for (auto& [prod, d] : fp_ddf(g)) {
            std::vector<FpPoly> irr;
            fp_edf(prod, d, irr, seed);
            for (auto& q : irr) out.push_back({q, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        return a.first.c < b.first.c;
    });
    return out;
}

bool fp_irreducible(const FpPoly& f) {
    if (f.deg() < 1) return false;
    if (!fp_squarefree(f)) return false;
    auto dd = fp_ddf(fp_monic(f));
    return dd.size() == 1 && dd[0].second == f.deg();
}

}  // namespace egr
