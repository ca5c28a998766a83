#include "egr/galois.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>

#include "egr/modp.hpp"

namespace egr {

namespace {

std::vector<int> digits(int x, int p, int k) {
    std::vector<int> d(k);
    for (int i = 0; i < k; i++) {
        d[i] = x % p;
        x /= p;
    }
    return d;
}

int undigits(const std::vector<int>& d, int p) {
    int x = 0;
    for (int i = (int)d.size() - 1; i >= 0; i--) x = x * p + d[i];
    return x;
}

}  // namespace

SmallField SmallField::make(int p, int k) {
    SmallField F;
    F.p = p;
    F.k = k;
    F.q = 1;
    for (int i = 0; i < k; i++) F.q *= p;
    if (F.q > 4096) throw std::domain_error("SmallField: field too large");
    if (k == 1) {
        F.defpoly = {0, 1};
        return F;
    }
    // brute force a monic irreducible of degree k
    int total = F.q;
    for (int tail = 0; tail < total; tail++) {
        FpPoly f((uint64_t)p);
        std::vector<int> d = digits(tail, p, k);
        for (int i = 0; i < k; i++) f.c.push_back((uint64_t)d[i]);
        f.c.push_back(1);
        if (fp_irreducible(f)) {
            F.defpoly.assign(k + 1, 0);
            for (int i = 0; i < k; i++) F.defpoly[i] = d[i];
            F.defpoly[k] = 1;
            return F;
        }
    }
    throw std::logic_error("SmallField: no irreducible polynomial found");
}

int SmallField::add(int x, int y) const {
    std::vector<int> a = digits(x, p, k), b = digits(y, p, k);
    for (int i = 0; i < k; i++) a[i] = (a[i] + b[i]) % p;
    return undigits(a, p);
}

int SmallField::neg(int x) const {
    std::vector<int> a = digits(x, p, k);
    for (int i = 0; i < k; i++) a[i] = (p - a[i]) % p;
    return undigits(a, p);
}

int SmallField::mul(int x, int y) const {
    std::vector<int> a = digits(x, p, k), b = digits(y, p, k);
    std::vector<int> c(2 * k - 1, 0);
    for (int i = 0; i < k; i++)
        for (int j = 0; j < k; j++) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    for (int d = 2 * k - 2; d >= k; d--) {
        int t = c[d];
        if (!t) continue;
        c[d] = 0;
        for (int i = 0; i < k; i++) c[d - k + i] = ((c[d - k + i] - t * defpoly[i]) % p + p) % p;
    }
    c.resize(k);
    return undigits(c, p);
}

int SmallField::inv(int x) const {
    if (x == 0) throw std::domain_error("SmallField::inv(0)");
    int y = x, r = 1;
    for (int e = q - 2; e; e >>= 1) {  // x^(q-2)
        if (e & 1) r = mul(r, y);
        y = mul(y, y);
    }
    return r;
}

int SmallField::from_int(long n) const {
    int r = (int)(((n % p) + p) % p);
    return r;
}

std::string SmallField::str(int x) const {
    if (k == 1) return std::to_string(x);
    if (q == 4) {
        static const char* names[4] = {"0", "1", "a", "a^2"};
        return names[x];
    }
    std::vector<int> d = digits(x, p, k);
    std::string s = "[";
    for (int i = 0; i < k; i++) s += (i ? "," : "") + std::to_string(d[i]);
    return s + "]";
}

int projective_frobenius_order(const SmallField& F, int abar, int qbar) {
    if (qbar == 0) return -1;
    // ratio r of the two roots satisfies r^2 - c r + 1 = 0, c = (a^2 - 2q)/q
    int c = F.mul(F.sub(F.mul(abar, abar), F.add(qbar, qbar)), F.inv(qbar));
    int two = F.from_int(2);
    if (F.mul(c, c) == F.mul(two, two)) return c == two ? 1 : 2;
    // iterate r^n = u + v r in the etale algebra F[r]/(r^2 - c r + 1)
    int u = 0, v = 1;
    for (int n = 1; n <= F.q * F.q; n++) {
        if (u == 1 && v == 0) return n;
        int nu = F.neg(v), nv = F.add(u, F.mul(v, c));
        u = nu;
        v = nv;
    }
    throw std::logic_error("projective_frobenius_order: no order found");
}

int reduce_golden_mod2(const Z& x, const Z& y) {
    int xb = (int)mpz_odd_p(x.get_mpz_t());
    int yb = (int)mpz_odd_p(y.get_mpz_t());
    return xb ^ (yb ? 3 : 0);  // e -> code 3 in GF(4)
}

int reduce_golden_mod_sqrt5(const Z& x, const Z& y) {
    Z r = (x + 3 * y) % 5;
    if (r < 0) r += 5;
    return (int)r.get_si();
}

int reduce_sqrt2_mod_sqrt2(const Z& x, const Z&) {
    return (int)mpz_odd_p(x.get_mpz_t());
}

double fontaine_bound(unsigned p, double delta_F) {
    return delta_F * std::pow((double)p, 1.0 + 1.0 / ((double)p - 1.0));
}

RamificationSupport ramification_support(const Z& disc) {
    RamificationSupport out;
    if (disc == 0) throw std::domain_error("ramification_support: zero discriminant");
    Z rest;
    auto fac = factor_integer(disc, rest);
    for (auto& [pr, e] : fac) out.primes.push_back(pr);
    out.complete = (rest == 1);
    std::sort(out.primes.begin(), out.primes.end());
    return out;
}

CycleTypeScan cycle_type_scan(const QPoly& f, uint64_t prime_bound, int threads) {
    Z den;
    std::vector<Z> fz = qpoly_primitive_z(f, den);
    Z disc_num = znum(qpoly_discriminant(f)) * zden(qpoly_discriminant(f));
    std::vector<uint64_t> primes = primes_below(prime_bound + 1);
    if (threads < 1) threads = 1;
    if ((size_t)threads > primes.size()) threads = primes.empty() ? 1 : (int)primes.size();

    std::vector<CycleTypeScan> parts(threads);
    auto work = [&](int t) {
        CycleTypeScan& local = parts[t];
        for (size_t i = t; i < primes.size(); i += threads) {
            uint64_t p = primes[i];
            if (mpz_divisible_ui_p(den.get_mpz_t(), p) ||
                mpz_divisible_ui_p(fz.back().get_mpz_t(), p) ||
                mpz_divisible_ui_p(disc_num.get_mpz_t(), p)) {
                local.primes_skipped++;
                continue;
            }
            FpPoly fp = fp_from_z(fz, p);
            if (!fp_squarefree(fp)) {
                local.primes_skipped++;
                continue;
            }
            std::vector<int> shape = fp_factor_degrees(fp);
            std::sort(shape.begin(), shape.end());
            local.counts[shape]++;
            local.primes_used++;
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; t++) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
    }
    CycleTypeScan out;
    for (auto& part : parts) {
        out.primes_used += part.primes_used;
        out.primes_skipped += part.primes_skipped;
        for (auto& [shape, n] : part.counts) out.counts[shape] += n;
    }
    return out;
}

Perm perm_mul(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); i++) r[i] = a[b[i]];
    return r;
}

std::vector<int> perm_cycle_type(const Perm& a) {
    std::vector<char> seen(a.size(), 0);
    std::vector<int> type;
    for (size_t i = 0; i < a.size(); i++) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = a[j]) {
            seen[j] = 1;
            len++;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end());
    return type;
}

std::vector<Perm> perm_group_closure(const std::vector<Perm>& gens) {
    std::vector<Perm> elems;
    std::map<Perm, int> index;
    Perm id(gens.at(0).size());
    for (size_t i = 0; i < id.size(); i++) id[i] = (int)i;
    elems.push_back(id);
    index[id] = 0;
    for (size_t head = 0; head < elems.size(); head++) {
        for (const Perm& g : gens) {
            Perm next = perm_mul(g, elems[head]);
            if (index.emplace(next, (int)elems.size()).second) elems.push_back(next);
            if (elems.size() > 2000000) throw std::logic_error("perm closure too large");
        }
    }
    return elems;
}

namespace {

Perm cyc(int n, std::initializer_list<std::initializer_list<int>> cycles) {
    Perm p(n);
    for (int i = 0; i < n; i++) p[i] = i;
    for (auto& c : cycles) {
        std::vector<int> v(c);
        for (size_t i = 0; i < v.size(); i++) p[v[i]] = v[(i + 1) % v.size()];
    }
    return p;
}

Perm shift6(const Perm& a) {
    Perm p(12);
    for (int i = 0; i < 12; i++) p[i] = i;
    for (int i = 0; i < 6; i++) p[6 + i] = 6 + a[i];
    return p;
}

Perm widen(const Perm& a) {
    Perm p(12);
    for (int i = 0; i < 12; i++) p[i] = i;
    for (int i = 0; i < 6; i++) p[i] = a[i];
    return p;
}

// S4 acting on the six 2-subsets of {0,1,2,3}: 01 02 03 12 13 23.
Perm s4_on_pairs(const Perm& s4) {
    static const int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    auto find = [&](int a, int b) {
        if (a > b) std::swap(a, b);
        for (int i = 0; i < 6; i++)
            if (pairs[i][0] == a && pairs[i][1] == b) return i;
        return -1;
    };
    Perm p(6);
    for (int i = 0; i < 6; i++) p[i] = find(s4[pairs[i][0]], s4[pairs[i][1]]);
    return p;
}

// S3 in its regular action, points indexed by the 6 elements of S3 on {0,1,2}.
std::vector<Perm> s3_regular_gens() {
    std::vector<Perm> s3;
    Perm base = {0, 1, 2};
    std::sort(base.begin(), base.end());
    do s3.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    auto idx = [&](const Perm& g) {
        for (int i = 0; i < 6; i++)
            if (s3[i] == g) return i;
        return -1;
    };
    std::vector<Perm> gens;
    for (const Perm& g : {cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})}) {
        Perm p(6);
        for (int i = 0; i < 6; i++) p[i] = idx(perm_mul(g, s3[i]));
        gens.push_back(p);
    }
    return gens;
}

// PSL2(5) on P^1(F5) = {0,1,2,3,4,inf=5}: x -> x+1 and x -> -1/x.
std::vector<Perm> a5_on_6_gens() {
    return {cyc(6, {{0, 1, 2, 3, 4}}), cyc(6, {{0, 5}, {1, 4}})};
}

std::vector<Perm> pair_group_gens(const std::vector<Perm>& hgens) {
    std::vector<Perm> gens;
    for (const Perm& g : hgens) {
        gens.push_back(widen(g));
        gens.push_back(shift6(g));
    }
    gens.push_back(cyc(12, {{0, 6}, {1, 7}, {2, 8}, {3, 9}, {4, 10}, {5, 11}}));
    return gens;
}

using ShapeCensus = std::map<std::vector<int>, uint64_t>;

ShapeCensus census_of_elems(const std::vector<Perm>& elems) {
    ShapeCensus c;
    for (const Perm& g : elems) c[perm_cycle_type(g)]++;
    return c;
}

struct IndexedGroup {
    std::vector<Perm> elems;
    std::map<Perm, int> index;

    explicit IndexedGroup(const std::vector<Perm>& gens) {
        elems = perm_group_closure(gens);
        for (size_t i = 0; i < elems.size(); i++) index[elems[i]] = (int)i;
    }
    int mul(int a, int b) const { return index.at(perm_mul(elems[a], elems[b])); }
    int size() const { return (int)elems.size(); }
};

/// Census of the action on left cosets of H; empty when the action is not
/// faithful.  H is a sorted list of element indices forming a subgroup.
ShapeCensus coset_action_census(const IndexedGroup& G, const std::vector<int>& H) {
    int n = G.size();
    std::vector<int> coset_rep(n, -1);  // element -> least index in its coset gH
    for (int g = 0; g < n; g++) {
        if (coset_rep[g] >= 0) continue;
        int rep = g;
        std::vector<int> members;
        for (int h : H) {
            int gh = G.mul(g, h);
            members.push_back(gh);
            rep = std::min(rep, gh);
        }
        for (int m : members) coset_rep[m] = rep;
    }
    std::vector<int> reps;
    std::map<int, int> rep_pos;
    for (int g = 0; g < n; g++)
        if (coset_rep[g] == g) {
            rep_pos[g] = (int)reps.size();
            reps.push_back(g);
        }
    int d = (int)reps.size();
    ShapeCensus census;
    int kernel = 0;
    for (int g = 0; g < n; g++) {
        Perm act(d);
        bool trivial = true;
        for (int c = 0; c < d; c++) {
            act[c] = rep_pos.at(coset_rep[G.mul(g, reps[c])]);
            trivial = trivial && act[c] == c;
        }
        kernel += trivial;
        census[perm_cycle_type(act)]++;
    }
    if (kernel != 1) return {};
    return census;
}

/// All subgroups of the given order that are generated by at most two
/// elements.  Complete whenever every subgroup of that order is 2-generated,
/// which holds for the orders used below (6, 8 with trivial core, 10, 12).
std::vector<std::vector<int>> small_subgroups(const IndexedGroup& G, int order) {
    int n = G.size();
    std::set<std::vector<int>> found;
    for (int a = 0; a < n; a++) {
        for (int b = a; b < n; b++) {
            std::vector<int> memb{0};
            std::set<int> seen{0};
            for (size_t head = 0; head < memb.size() && (int)memb.size() <= order; head++) {
                for (int g : {a, b}) {
                    int x = G.mul(g, memb[head]);
                    if (seen.insert(x).second) memb.push_back(x);
                }
            }
            if ((int)memb.size() != order) continue;
            found.insert(std::vector<int>(seen.begin(), seen.end()));
        }
    }
    return std::vector<std::vector<int>>(found.begin(), found.end());
}

void push_unique(std::vector<ShapeCensus>& actions, ShapeCensus c) {
    if (c.empty()) return;
    for (const auto& a : actions)
        if (a == c) return;
    actions.push_back(std::move(c));
}

/// Candidate with one census per faithful transitive action of the stated
/// degree, found by exhausting the subgroups of index = degree.
GroupCandidate candidate_all_actions(const std::string& name, const std::vector<Perm>& gens,
                                     int degree) {
    GroupCandidate c;
    c.name = name;
    IndexedGroup G(gens);
    c.order = (uint64_t)G.size();
    for (const auto& H : small_subgroups(G, G.size() / degree))
        push_unique(c.actions, coset_action_census(G, H));
    return c;
}

// The wreath square of S4 has order 1152; exhausting its order 96 subgroups
// is out of reach for the 2-generator search, but up to conjugacy the
// faithful ones are known: products S4 x C4 and S4 x V4' (V4' a non-normal
// Klein subgroup), and the two fibered products {(u,v) in D4 x S4 :
// chi(u) = sgn(v)} with chi of kernel C4 or V4'.  Every other candidate from
// the subgroup structure of S4 x S4 contains the normal V4 x V4.
GroupCandidate s4_wreath_candidate() {
    GroupCandidate c;
    c.name = "S4sq.2";
    std::vector<Perm> s4on6 = {s4_on_pairs(cyc(4, {{0, 1, 2, 3}})),
                               s4_on_pairs(cyc(4, {{0, 1}}))};
    IndexedGroup G(pair_group_gens(s4on6));
    c.order = (uint64_t)G.size();

    // identify (u, v, swap) inside the block realization via the pairs action
    std::vector<Perm> s4;
    Perm base = {0, 1, 2, 3};
    do s4.push_back(base);
    while (std::next_permutation(base.begin(), base.end()));
    std::map<Perm, int> pairs_to_s4;
    for (size_t i = 0; i < s4.size(); i++) pairs_to_s4[s4_on_pairs(s4[i])] = (int)i;

    auto in_set = [&](int ui, std::initializer_list<Perm> set) {
        for (const Perm& g : set)
            if (s4[ui] == g) return true;
        return false;
    };
    auto in_c4 = [&](int ui) {
        return in_set(ui, {cyc(4, {}), cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}, {1, 3}}),
                           cyc(4, {{0, 3, 2, 1}})});
    };
    auto in_d4 = [&](int ui) {
        return in_c4(ui) || in_set(ui, {cyc(4, {{0, 2}}), cyc(4, {{1, 3}}),
                                        cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 3}, {1, 2}})});
    };
    auto in_klein2 = [&](int ui) {  // {e, (02)(13), (02), (13)}, the other Klein in D4
        return in_set(ui, {cyc(4, {}), cyc(4, {{0, 2}, {1, 3}}), cyc(4, {{0, 2}}),
                           cyc(4, {{1, 3}})});
    };
    auto in_v4p = [&](int ui) {  // {e, (01), (23), (01)(23)}
        return in_set(ui, {cyc(4, {}), cyc(4, {{0, 1}}), cyc(4, {{2, 3}}),
                           cyc(4, {{0, 1}, {2, 3}})});
    };
    auto sgn_even = [&](int vi) {
        int inv = 0;
        for (int i = 0; i < 4; i++)
            for (int j = i + 1; j < 4; j++) inv += s4[vi][i] > s4[vi][j];
        return inv % 2 == 0;
    };

    std::vector<std::vector<int>> subgroups(4);
    for (int g = 0; g < G.size(); g++) {
        const Perm& p = G.elems[g];
        if (p[0] >= 6) continue;  // block swap
        Perm top(p.begin(), p.begin() + 6);
        Perm bot(6);
        for (int i = 0; i < 6; i++) bot[i] = p[6 + i] - 6;
        int u = pairs_to_s4.at(top), v = pairs_to_s4.at(bot);
        if (in_v4p(u)) subgroups[0].push_back(g);
        if (in_c4(u)) subgroups[1].push_back(g);
        if (in_d4(u) && in_c4(u) == sgn_even(v)) subgroups[2].push_back(g);
        if (in_d4(u) && in_klein2(u) == sgn_even(v)) subgroups[3].push_back(g);
    }
    for (const auto& H : subgroups) {
        if ((int)H.size() * 12 != G.size())
            throw std::logic_error("s4_wreath_candidate: bad subgroup order");
        push_unique(c.actions, coset_action_census(G, H));
    }
    return c;
}

}  // namespace

std::vector<GroupCandidate> candidate_groups(int degree) {
    std::vector<GroupCandidate> out;
    std::vector<Perm> s3sq = {cyc(6, {{0, 1, 2}}), cyc(6, {{0, 1}}), cyc(6, {{3, 4, 5}}),
                              cyc(6, {{3, 4}}), cyc(6, {{0, 3}, {1, 4}, {2, 5}})};
    std::vector<Perm> c2s4 = {cyc(6, {{0, 1, 3, 4}}), cyc(6, {{0, 2}, {3, 5}})};
    if (degree == 6) {
        out.push_back(candidate_all_actions("S3wr2", s3sq, 6));
        out.push_back(candidate_all_actions("2xS4", c2s4, 6));
        out.push_back(candidate_all_actions("A5", a5_on_6_gens(), 6));
    } else if (degree == 12) {
        out.push_back(candidate_all_actions("S3sq.2", pair_group_gens(s3_regular_gens()), 12));
        out.push_back(s4_wreath_candidate());
        // the wreath square of A5 has a single conjugacy class of faithful
        // index 12 subgroups (D5 x A5), realized by the block action
        GroupCandidate a5c;
        a5c.name = "A5sq.2";
        std::vector<Perm> elems = perm_group_closure(pair_group_gens(a5_on_6_gens()));
        a5c.order = elems.size();
        a5c.actions.push_back(census_of_elems(elems));
        out.push_back(a5c);
    } else {
        throw std::domain_error("candidate_groups: degree must be 6 or 12");
    }
    return out;
}

std::vector<GroupComparison> compare_group_candidates(const CycleTypeScan& scan,
                                                      int degree) {
    std::vector<GroupComparison> out;
    for (const GroupCandidate& g : candidate_groups(degree)) {
        GroupComparison cmp;
        cmp.name = g.name;
        bool any_fit = false;
        double best_chi = 0;
        for (const auto& census : g.actions) {
            bool fits = true;
            for (auto& [shape, n] : scan.counts)
                if (n > 0 && !census.count(shape)) fits = false;
            if (!fits) continue;
            double chi = 0;
            if (scan.primes_used > 0) {
                for (auto& [shape, cnt] : census) {
                    double expect = (double)cnt / (double)g.order;
                    auto it = scan.counts.find(shape);
                    double obs = it == scan.counts.end()
                                     ? 0.0
                                     : (double)it->second / (double)scan.primes_used;
                    chi += (obs - expect) * (obs - expect) / expect;
                }
            }
            if (!any_fit || chi < best_chi) best_chi = chi;
            any_fit = true;
        }
        if (any_fit) {
            cmp.chi_square = best_chi;
        } else {
            cmp.eliminated = true;
            for (auto& [shape, n] : scan.counts) {
                if (n == 0) continue;
                bool everywhere_missing = true;
                for (const auto& census : g.actions)
                    if (census.count(shape)) everywhere_missing = false;
                if (everywhere_missing) {
                    cmp.witness = shape;
                    break;
                }
            }
        }
        out.push_back(cmp);
    }
    return out;
}

namespace {

// 2x2 matrices over F2[eps]/(eps^2); entry codes a + 2b for a + b*eps,
// matrix = e00 | e01<<2 | e10<<4 | e11<<6.
int rmul(int x, int y) {
    int a0 = x & 1, a1 = (x >> 1) & 1, b0 = y & 1, b1 = (y >> 1) & 1;
    return (a0 & b0) | (((a0 & b1) ^ (a1 & b0)) << 1);
}

int mat_entry(int m, int r, int c) { return (m >> (2 * (2 * r + c))) & 3; }

int mat_mul(int m, int n) {
    int out = 0;
    for (int r = 0; r < 2; r++)
        for (int c = 0; c < 2; c++) {
            int e = rmul(mat_entry(m, r, 0), mat_entry(n, 0, c)) ^
                    rmul(mat_entry(m, r, 1), mat_entry(n, 1, c));
            out |= e << (2 * (2 * r + c));
        }
    return out;
}

int mat_make(int e00, int e01, int e10, int e11) {
    return e00 | (e01 << 2) | (e10 << 4) | (e11 << 6);
}

int mat_det(int m) {
    return rmul(mat_entry(m, 0, 0), mat_entry(m, 1, 1)) ^
           rmul(mat_entry(m, 0, 1), mat_entry(m, 1, 0));
}

int mat_eps0(int m) {  // reduce eps -> 0, keep the same packing
    return m & 0x55;
}

}  // namespace

SL2Report build_and_verify_sl2_f2eps() {
    SL2Report rep;
    int A = mat_make(3, 2, 1, 1);  // [[1+eps, eps], [1, 1]]
    int B = mat_make(0, 1, 1, 0);
    if (mat_det(A) != 1 || mat_det(B) != 1) return rep;
    int I = mat_make(1, 0, 0, 1);

    Perm pg1 = cyc(6, {{0, 1, 3, 4}});
    Perm pg2 = cyc(6, {{0, 2}, {3, 5}});
    Perm pid(6);
    for (int i = 0; i < 6; i++) pid[i] = i;

    // simultaneous closure: word images under A,B and under pg1,pg2 in parallel
    std::vector<int> mats{I};
    std::vector<Perm> perms{pid};
    std::map<int, int> seen{{I, 0}};
    bool welldef = true;
    for (size_t head = 0; head < mats.size(); head++) {
        for (int which = 0; which < 2; which++) {
            int m = mat_mul(which ? B : A, mats[head]);
            Perm p = perm_mul(which ? pg2 : pg1, perms[head]);
            auto [it, fresh] = seen.emplace(m, (int)mats.size());
            if (fresh) {
                mats.push_back(m);
                perms.push_back(p);
            } else if (perms[it->second] != p) {
                welldef = false;
            }
        }
    }
    rep.order = mats.size();

    // the matched permutations must be pairwise distinct for an isomorphism
    std::map<Perm, int> pseen;
    bool inj = true;
    for (size_t i = 0; i < perms.size(); i++)
        if (!pseen.emplace(perms[i], (int)i).second) inj = false;
    rep.perm_isomorphic = welldef && inj &&
                          perm_group_closure({pg1, pg2}).size() == rep.order;

    std::vector<int> kernel;
    for (int m : mats)
        if (mat_eps0(m) == I) kernel.push_back(m);
    rep.kernel_order = kernel.size();
    rep.kernel_elem_abelian = true;
    for (int m : kernel) {
        if (mat_mul(m, m) != I) rep.kernel_elem_abelian = false;
        for (int n : kernel)
            if (mat_mul(m, n) != mat_mul(n, m)) rep.kernel_elem_abelian = false;
    }
    rep.ok = rep.order == 48 && rep.kernel_order == 8 && rep.kernel_elem_abelian &&
             rep.perm_isomorphic;
    return rep;
}

}  // namespace egr
