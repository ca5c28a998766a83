#include "egr/enumerate.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "egr/heights.hpp"

namespace egr {

namespace {

Q upper_q(const RBall& b) {
    mpf_class hi = b.c + b.r;
    mpf_mul_2exp(hi.get_mpf_t(), hi.get_mpf_t(), 32);
    Z m;
    mpz_set_f(m.get_mpz_t(), mpf_class(ceil(hi)).get_mpf_t());
    Q out(m);
    out /= zpow(Z(2), 32);
    return out;
}

// exact H(x) <= B with a ball fast path
bool height_leq_fast(const NFElement& x, const Q& B) {
    if (x.is_zero() || x.is_rational()) return height_leq(x, B);
    RBall h = height_ball(x, 96);
    if (h.c + h.r < mpf_class(B, 160)) return true;
    if (h.c - h.r > mpf_class(B, 160)) return false;
    return height_leq(x, B);
}

struct ElementSet {
    std::set<std::string> seen;
    std::vector<NFElement> items;

    void add(const NFElement& x) {
        std::string key;
        for (const Q& c : x.a) key += c.get_str() + ",";
        if (seen.insert(key).second) items.push_back(x);
    }
};

// generator of the fractional ideal a * b^-1, if principal and found;
// unit-reduced so the height of the representative stays moderate
std::optional<NFElement> pair_generator(const Ideal& a, const Ideal& b,
                                        const UnitGroup& U) {
    Ideal c = ideal_mul(a, ideal_inverse(b));
    Ideal J;
    J.K = c.K;
    J.h = c.h;
    J.den = 1;
    auto g = principal_generator(J);
    if (!g) g = principal_generator_factored(J, U);
    if (!g) return std::nullopt;
    return unit_reduce(*g * Q(Z(1), c.den), U);
}

}  // namespace

void sort_elements(std::vector<NFElement>& v) {
    std::vector<std::pair<std::pair<double, std::string>, NFElement>> keyed;
    for (const NFElement& x : v) {
        RBall h = height_ball(x, 96);
        std::string key;
        for (const Q& c : x.a) key += c.get_str() + ",";
        keyed.push_back({{h.c.get_d(), key}, x});
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    v.clear();
    for (auto& [k, x] : keyed) v.push_back(x);
}

EnumerationResult enumerate_bounded_height(NFPtr K, const Q& B, const UnitGroup& U) {
    if (B < 1) throw std::domain_error("enumerate_bounded_height: bound below 1");
    EnumerationResult res;
    ElementSet S;
    S.add(NFElement::zero(K));

    auto L = ideals_of_norm_up_to(K, B);
    res.stats.n_ideals = L.size();

    std::vector<NFElement> G;
    ElementSet gset;
    for (size_t i = 0; i < L.size(); i++)
        for (size_t j = i; j < L.size(); j++) {
            if (!ideals_coprime(L[i].first, L[j].first)) continue;
            auto xi = pair_generator(L[i].first, L[j].first, U);
            if (!xi) {
                res.stats.unresolved++;
                continue;
            }
            size_t before = gset.seen.size();
            gset.add(*xi);
            if (gset.seen.size() > before) G.push_back(*xi);
            NFElement inv = xi->inv();
            before = gset.seen.size();
            gset.add(inv);
            if (gset.seen.size() > before) G.push_back(inv);
        }
    res.stats.n_generators = G.size();

    Q B0 = 1;
    for (const NFElement& xi : G) {
        Q ub = upper_q(height_ball(xi, 128));
        if (ub > B0) B0 = ub;
    }
    res.stats.B0 = B0;

    auto units = units_of_height_up_to(U, B * B0);
    res.stats.n_units = units.size();

    for (const NFElement& xi : G)
        for (const NFElement& u : units) {
            NFElement x = u * xi;
            if (height_leq_fast(x, B)) S.add(x);
        }

    res.elements = std::move(S.items);
    sort_elements(res.elements);
    bool units_ok = U.cert != UnitCertification::Heuristic && U.full_rank();
    res.complete = units_ok && res.stats.unresolved == 0;
    res.completeness = res.complete ? "complete" : "complete relative to supplied units";
    return res;
}

EnumerationResult enumerate_bounded_height(NFPtr K, const Q& B) {
    return enumerate_bounded_height(K, B, unit_group(K));
}

std::vector<NFElement> enumerate_with_denominator(NFPtr K, const Ideal& b, const Q& B,
                                                 const UnitGroup& U) {
    if (!b.is_integral()) throw std::domain_error("enumerate_with_denominator: b not integral");
    ElementSet S;
    Z nb = b.lattice_norm();
    if (Q(nb) > B) return {};
    if (b.is_whole_ring()) S.add(NFElement::zero(K));
    auto L = ideals_of_norm_up_to(K, B);
    std::vector<NFElement> G;
    for (auto& [a, na] : L) {
        if (!ideals_coprime(a, b)) continue;
        auto xi = pair_generator(a, b, U);
        if (xi) G.push_back(*xi);
    }
    Q B0 = 1;
    for (const NFElement& xi : G) {
        Q ub = upper_q(height_ball(xi, 128));
        if (ub > B0) B0 = ub;
    }
    auto units = units_of_height_up_to(U, B * B0);
    for (const NFElement& xi : G)
        for (const NFElement& u : units) {
            NFElement x = u * xi;
            if (!height_leq_fast(x, B)) continue;
            if (x.is_zero()) continue;
            Ideal num, den;
            numerator_denominator(x, num, den);
            if (!ideal_eq(den, b)) throw std::logic_error("enumerate_with_denominator: "
                                                          "denominator drifted");
            S.add(x);
        }
    sort_elements(S.items);
    return S.items;
}

std::vector<NFElement> brute_force_bounded_height(NFPtr K, const Q& B, long box) {
    int n = K->n;
    ElementSet S;
    S.add(NFElement::zero(K));
    Z Bz;
    mpz_fdiv_q(Bz.get_mpz_t(), znum(B).get_mpz_t(), zden(B).get_mpz_t());
    for (Z m = 1; m <= Bz; m++) {
        std::vector<long> c(n, -box);
        while (true) {
            Z content = 0;
            for (long v : c) mpz_gcd_ui(content.get_mpz_t(), content.get_mpz_t(),
                                        (unsigned long)std::abs(v));
            Z g;
            mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), m.get_mpz_t());
            bool reduced = (g == 1) || (content == 0 && m == 1);
            if (reduced && !(content == 0)) {
                QVec ic(n);
                for (int i = 0; i < n; i++) ic[i] = Q(c[i]);
                NFElement y = NFElement::from_integral(K, ic);
                NFElement x = y * Q(Z(1), m);
                // cheap norm-based reject before the exact filter
                Q nq = abs(y.norm()) / qpow(Q(m), n);
                if (nq <= B && height_leq_fast(x, B)) S.add(x);
            }
            int i = 0;
            while (i < n && c[i] == box) c[i++] = -box;
            if (i == n) break;
            c[i]++;
        }
    }
    sort_elements(S.items);
    return S.items;
}

}  // namespace egr
