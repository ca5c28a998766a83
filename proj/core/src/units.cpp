#include "egr/units.hpp"

#include <array>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "egr/heights.hpp"
#include "egr/lattice.hpp"

namespace egr {

namespace {

Z zisqrt(const Z& n) {
    Z r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool squarefree_known(const Z& n) {
    Z m = abs(n), unfac;
    auto fac = factor_integer(m, unfac);
    if (unfac != 1) throw std::runtime_error("squarefree test: incomplete factorization");
    for (auto& [p, e] : fac)
        if (e > 1) return false;
    return true;
}

// midpoint of an mpf, rounded to a dyadic rational with the given precision
Q q_from_mpf(const mpf_class& c, unsigned bits) {
    mpf_class s = c;
    mpf_mul_2exp(s.get_mpf_t(), s.get_mpf_t(), bits);
    mpf_class half = s >= 0 ? mpf_class(0.5) : mpf_class(-0.5);
    Z m;
    mpz_set_f(m.get_mpz_t(), mpf_class(trunc(s + half)).get_mpf_t());
    Q out(m);
    out /= zpow(Z(2), bits);
    return out;
}

// T2-style Gram matrix of field elements with per-place scale factors,
// rounded to dyadic rationals (search heuristic only; results are verified
// exactly downstream)
QMat gram_t2(const std::vector<NFElement>& basis, const std::vector<Q>& scale,
             unsigned prec) {
    NFPtr K = basis[0].K;
    auto w = K->embedding_weights();
    int m = (int)basis.size();
    std::vector<std::vector<CBall>> emb(m);
    for (int i = 0; i < m; i++) emb[i] = basis[i].embed(prec);
    QMat G(m, QVec(m, Q(0)));
    for (int i = 0; i < m; i++)
        for (int j = i; j < m; j++) {
            RBall s(mpf_class(0, prec));
            for (size_t v = 0; v < w.size(); v++) {
                RBall term = emb[i][v].re * emb[j][v].re + emb[i][v].im * emb[j][v].im;
                RBall sv(scale[v] * Q(w[v]), prec);
                s = s + sv * term;
            }
            G[i][j] = G[j][i] = q_from_mpf(s.c, 48);
        }
    return G;
}

// continued fraction of (t + sqrt(D))/2; returns the fundamental unit as
// coordinates (A, B) over {1, w}, w = (t + sqrt(D))/2, both nonnegative
std::pair<Z, Z> cf_fundamental_unit(const Z& D) {
    Z t = D % 2 != 0 ? 1 : 0;
    Q nw = Q(t * t - D) / 4;  // N(w), an integer
    if (!is_int(nw)) throw std::logic_error("cf unit: discriminant parity");
    Z nwz = znum(nw);
    Z s = zisqrt(D);
    // alpha_k = (P + sqrt(D)) / Qd
    Z P = t, Qd = 2;
    Z pm1 = 1, p0, qm1 = 0, q0;
    bool first = true;
    for (int iter = 0; iter < 200000; iter++) {
        Z a;
        if (Qd > 0) {
            Z num = P + s;
            mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), Qd.get_mpz_t());
        } else {
            Z num = P + s + 1;
            mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), Qd.get_mpz_t());
        }
        Z p, q;
        if (first) {
            p = a;
            q = 1;
        } else {
            p = a * p0 + pm1;
            q = a * q0 + qm1;
        }
        pm1 = first ? Z(1) : p0;
        qm1 = first ? Z(0) : q0;
        p0 = p;
        q0 = q;
        first = false;
        // candidate unit p - q * conj(w) has norm p^2 - t p q + N(w) q^2
        Z nrm = p * p - t * p * q + nwz * q * q;
        if (nrm == 1 || nrm == -1) {
            // u = p - q * conj(w) = p - q*(t - w) = (p - q t) + q w,
            // the representative exceeding 1 at the sqrt(D) > 0 embedding
            Z A = p - q * t;
            Z B = q;
            if (B <= 0 || A < 0) throw std::logic_error("cf unit: normalization");
            return {A, B};
        }
        P = a * Qd - P;
        Qd = (D - P * P) / Qd;
    }
    throw std::runtime_error("cf unit: period bound exceeded");
}

std::vector<Z> divisors_of(const Z& n) {
    std::vector<Z> out;
    Z m = abs(n);
    for (Z i = 1; i * i <= m; i++)
        if (m % i == 0) {
            out.push_back(i);
            if (i * i != m) out.push_back(m / i);
        }
    return out;
}

}  // namespace

bool is_fundamental_discriminant_real(const Z& D) {
    if (D <= 1) return false;
    Z r;
    if (perfect_square(D, r)) return false;
    if (D % 4 == 1) return squarefree_known(D);
    if (D % 4 == 0) {
        Z m = D / 4;
        Z m4 = m % 4;
        if (m4 != 2 && m4 != 3) return false;
        return squarefree_known(m);
    }
    return false;
}

NFElement fundamental_unit_quadratic(const Z& D, NFPtr* field) {
    if (!is_fundamental_discriminant_real(D))
        throw std::domain_error("fundamental_unit_quadratic: not a fundamental discriminant");
    Z t = D % 2 != 0 ? 1 : 0;
    QPoly f({Q(t * t - D) / 4, Q(-t), Q(1)});  // minimal polynomial of w
    NFPtr K = NumberField::create(f, "Q(sqrt" + D.get_str() + ")");
    if (field) *field = K;
    auto [A, B] = cf_fundamental_unit(D);
    NFElement u(K, {Q(A), Q(B)});
    if (abs(u.norm()) != 1) throw std::logic_error("fundamental_unit_quadratic: norm");
    return u;
}

NFElement fundamental_unit_quadratic_in(NFPtr K) {
    if (K->n != 2 || K->r1 != 2)
        throw std::domain_error("fundamental_unit_quadratic_in: field not real quadratic");
    Z D = K->field_disc;
    auto [A, B] = cf_fundamental_unit(D);
    // express w = (t + sqrt(D))/2 through the generator: for f = x^2 + b x + c,
    // disc(f) = s^2 D and sqrt(D) = (2 theta + b) / s
    Q b = K->f.coeff(1);
    Q df = b * b - 4 * K->f.coeff(0);
    Q s2 = df / Q(D), s;
    if (!rational_square(s2, s))
        throw std::logic_error("fundamental_unit_quadratic_in: discriminant mismatch");
    if (s < 0) s = -s;
    Z t = D % 2 != 0 ? 1 : 0;
    // u = A + B (t + (2 theta + b)/s) / 2
    Q c0 = Q(A) + Q(B) * (Q(t) + b / s) / 2;
    Q c1 = Q(B) / s;
    NFElement u(K, {c0, c1});
    if (abs(u.norm()) != 1 || !u.is_integral())
        throw std::logic_error("fundamental_unit_quadratic_in: verification");
    return u;
}

Z narrow_class_number_quadratic(const Z& D) {
    if (!is_fundamental_discriminant_real(D))
        throw std::domain_error("narrow_class_number_quadratic: not a fundamental discriminant");
    Z s = zisqrt(D);
    // reduced indefinite forms (a, b, c): 0 < b < sqrt(D), sqrt(D) - b < 2|a| < sqrt(D) + b
    std::set<std::array<Z, 3>> forms;
    for (Z b = D % 2 != 0 ? 1 : 2; b <= s; b += 2) {
        Z ac = (b * b - D) / 4;
        for (const Z& d : divisors_of(ac)) {
            for (int sign : {1, -1}) {
                Z a = sign * d, c = ac / a;
                Z ta = 2 * abs(a);
                if ((ta + b) * (ta + b) <= D) continue;
                if (ta > b && (ta - b) * (ta - b) >= D) continue;
                forms.insert({a, b, c});
            }
        }
    }
    auto rho = [&](const std::array<Z, 3>& F) -> std::array<Z, 3> {
        Z m = 2 * abs(F[2]);
        Z r = s - Z((s + F[1]) % m);
        Z c2 = (r * r - D) / (4 * F[2]);
        return {F[2], r, c2};
    };
    Z cycles = 0;
    std::set<std::array<Z, 3>> seen;
    for (const auto& F : forms) {
        if (seen.count(F)) continue;
        cycles++;
        std::array<Z, 3> G = F;
        do {
            seen.insert(G);
            G = rho(G);
            if (!forms.count(G)) throw std::logic_error("narrow class: rho left the reduced set");
        } while (G != F);
    }
    return cycles;
}

std::vector<NFElement> UnitGroup::torsion_units() const {
    std::vector<NFElement> out;
    NFElement t = NFElement::one(K);
    for (int i = 0; i < torsion_order; i++) {
        out.push_back(t);
        t = t * torsion_gen;
    }
    return out;
}

namespace {

void compute_torsion(UnitGroup& U) {
    NFPtr K = U.K;
    if (K->r1 > 0) {
        U.torsion_gen = NFElement::from_q(K, Q(-1));
        U.torsion_order = 2;
        return;
    }
    if (K->n != 2)
        throw std::domain_error("torsion units computed only for fields with a real place "
                                "or imaginary quadratics");
    // imaginary quadratic: integral elements of norm 1 in a small box
    std::vector<NFElement> tor;
    for (long x = -2; x <= 2; x++)
        for (long y = -2; y <= 2; y++) {
            NFElement u = NFElement::from_integral(K, {Q(x), Q(y)});
            if (!u.is_zero() && u.norm() == 1) tor.push_back(u);
        }
    int best_ord = 0;
    NFElement best;
    for (const NFElement& u : tor) {
        int ord = 1;
        NFElement p = u;
        while (!(p == NFElement::one(K))) {
            p = p * u;
            if (++ord > 12) throw std::logic_error("torsion: order overflow");
        }
        if (ord > best_ord) {
            best_ord = ord;
            best = u;
        }
    }
    if (best_ord != (int)tor.size()) throw std::logic_error("torsion: group not cyclic?");
    U.torsion_gen = best;
    U.torsion_order = best_ord;
}

// log vectors lambda(u)_v = n_v log|u|_v as balls
std::vector<RBall> log_vector(const NFElement& u, unsigned prec) {
    auto emb = u.embed(prec);
    auto w = u.K->embedding_weights();
    std::vector<RBall> out;
    for (size_t v = 0; v < emb.size(); v++) {
        RBall a = emb[v].abs_ball();
        RBall l = rball_log(a);
        RBall wv(Q(w[v]), prec);
        out.push_back(wv * l);
    }
    return out;
}

// numeric rank of the log vectors, with a crude but adequate threshold
int log_rank(const std::vector<std::vector<RBall>>& logs) {
    int m = (int)logs.size();
    if (m == 0) return 0;
    int d = (int)logs[0].size();
    std::vector<std::vector<double>> v(m, std::vector<double>(d));
    for (int i = 0; i < m; i++)
        for (int j = 0; j < d; j++) v[i][j] = logs[i][j].c.get_d();
    int rank = 0;
    for (int i = 0; i < m; i++) {
        for (int k = 0; k < rank; k++) {
            double dot = 0, nn = 0;
            for (int j = 0; j < d; j++) {
                dot += v[i][j] * v[k][j];
                nn += v[k][j] * v[k][j];
            }
            if (nn > 0)
                for (int j = 0; j < d; j++) v[i][j] -= dot / nn * v[k][j];
        }
        double nrm = 0;
        for (int j = 0; j < d; j++) nrm += v[i][j] * v[i][j];
        if (nrm > 1e-12) {
            std::swap(v[i], v[rank]);
            rank++;
        }
    }
    return rank;
}

// try to recognize a p-th root of the unit u inside K from its embeddings,
// over all sign / phase choices; exact verification before accepting
std::optional<NFElement> pth_root_in_field(const NFElement& u, int p) {
    NFPtr K = u.K;
    int n = K->n;
    unsigned prec = 512;
    auto eu = u.embed(prec);
    auto th = K->embeddings(prec);
    // all n conjugates of the generator and of u
    std::vector<CBall> gens, vals;
    for (int v = 0; v < K->r1; v++) {
        gens.push_back(th[v]);
        vals.push_back(eu[v]);
    }
    for (int v = 0; v < K->r2; v++) {
        gens.push_back(th[K->r1 + v]);
        gens.push_back(th[K->r1 + v].conj());
        vals.push_back(eu[K->r1 + v]);
        vals.push_back(eu[K->r1 + v].conj());
    }
    // p-th roots per conjugate; real conjugates get real roots
    auto root_of = [&](const CBall& z, int choice) -> std::optional<CBall> {
        double re = z.re.c.get_d(), im = z.im.c.get_d();
        double mod = std::sqrt(re * re + im * im);
        double arg = std::atan2(im, re);
        double rm = std::pow(mod, 1.0 / p);
        double ra = (arg + 2 * M_PI * choice) / p;
        // seed then Newton-polish x^p - z at working precision
        CBall x(RBall(mpf_class(rm * std::cos(ra), prec)),
                RBall(mpf_class(rm * std::sin(ra), prec)));
        CBall zc = z;
        for (int it = 0; it < 64; it++) {
            CBall xp(RBall(mpf_class(1, prec)), RBall(mpf_class(0, prec)));
            for (int k = 0; k < p - 1; k++) xp = xp * x;
            CBall f = xp * x - zc;
            CBall df = xp * CBall(RBall(Q(p), prec), RBall(mpf_class(0, prec)));
            if (df.re.contains_zero() && df.im.contains_zero()) return std::nullopt;
            x = x - f / df;
        }
        return x;
    };
    // enumerate choices: real places p=2 -> {0,1} (sign), p odd -> single real root;
    // complex upper-half places -> p choices
    int nreal_choices = (p % 2 == 0) ? 2 : 1;
    std::vector<int> radix;
    for (int v = 0; v < K->r1; v++) radix.push_back(nreal_choices);
    for (int v = 0; v < K->r2; v++) radix.push_back(p);
    long total = 1;
    for (int r : radix) total *= r;
    for (long idx = 0; idx < total; idx++) {
        long rem = idx;
        std::vector<CBall> rv(n);
        bool ok = true;
        int pos = 0;
        for (int v = 0; v < K->r1 && ok; v++, pos++) {
            int ch = (int)(rem % radix[pos]);
            rem /= radix[pos];
            if (p % 2 == 0 && vals[v].re.c < 0) {
                ok = false;
                break;
            }
            auto r0 = root_of(vals[v], 0);
            if (!r0) {
                ok = false;
                break;
            }
            CBall r = *r0;
            if (p % 2 != 0 && vals[v].re.c < 0) {
                // real cube-style root of a negative number
                CBall mz = CBall(RBall(mpf_class(0, 512)), RBall(mpf_class(0, 512))) - vals[v];
                auto rr = root_of(mz, 0);
                if (!rr) {
                    ok = false;
                    break;
                }
                r = CBall(RBall(mpf_class(0, 512)), RBall(mpf_class(0, 512))) - *rr;
            }
            if (ch == 1) r = CBall(RBall(mpf_class(0, 512)), RBall(mpf_class(0, 512))) - r;
            rv[v] = r;
        }
        if (!ok) continue;
        for (int v = 0; v < K->r2 && ok; v++, pos++) {
            int ch = (int)(rem % radix[pos]);
            rem /= radix[pos];
            auto r = root_of(vals[K->r1 + 2 * v], ch);
            if (!r) {
                ok = false;
                break;
            }
            rv[K->r1 + 2 * v] = *r;
            rv[K->r1 + 2 * v + 1] = r->conj();
        }
        if (!ok) continue;
        // solve the Vandermonde system for power basis coordinates
        std::vector<std::vector<CBall>> M(n, std::vector<CBall>(n + 1));
        for (int i = 0; i < n; i++) {
            CBall pw(RBall(mpf_class(1, prec)), RBall(mpf_class(0, prec)));
            for (int j = 0; j < n; j++) {
                M[i][j] = pw;
                pw = pw * gens[i];
            }
            M[i][n] = rv[i];
        }
        bool solved = true;
        for (int col = 0; col < n && solved; col++) {
            int piv = -1;
            for (int row = col; row < n; row++)
                if (!(M[row][col].re.contains_zero() && M[row][col].im.contains_zero())) {
                    piv = row;
                    break;
                }
            if (piv < 0) {
                solved = false;
                break;
            }
            std::swap(M[col], M[piv]);
            for (int row = 0; row < n; row++) {
                if (row == col) continue;
                CBall f = M[row][col] / M[col][col];
                for (int j = col; j <= n; j++) M[row][j] = M[row][j] - f * M[col][j];
            }
        }
        if (!solved) continue;
        QVec pc(n);
        bool realc = true;
        for (int i = 0; i < n; i++) {
            CBall c = M[i][n] / M[i][i];
            if (abs(c.im.c) > 1e-20) realc = false;
            pc[i] = q_from_mpf(c.re.c, 80);
        }
        if (!realc) continue;
        // round over the integral basis and verify exactly
        NFElement cand(K, pc);
        QVec ic = cand.integral_coords();
        QVec ri(n);
        for (int i = 0; i < n; i++) {
            mpf_class f(ic[i], 256);
            Z m;
            mpf_class half = f >= 0 ? mpf_class(0.5) : mpf_class(-0.5);
            mpz_set_f(m.get_mpz_t(), mpf_class(trunc(f + half)).get_mpf_t());
            ri[i] = Q(m);
        }
        NFElement v = NFElement::from_integral(K, ri);
        if (v.is_zero()) continue;
        NFElement vp = v.pow(p);
        if (vp == u) return v;
    }
    return std::nullopt;
}

// heuristic independent-unit search through short vectors in scaled
// Minkowski lattices; every candidate is verified to be a unit exactly
std::vector<NFElement> heuristic_unit_search(NFPtr K, int target_rank) {
    int n = K->n;
    std::vector<NFElement> basis;
    for (int j = 0; j < n; j++) {
        QVec c(n, Q(0));
        c[j] = 1;
        basis.push_back(NFElement::from_integral(K, c));
    }
    int places = K->r1 + K->r2;
    std::vector<std::vector<Q>> scalings;
    scalings.push_back(std::vector<Q>(places, Q(1)));
    for (int v = 0; v < places; v++) {
        std::vector<Q> s(places, Q(1));
        s[v] = 8;
        scalings.push_back(s);
        s[v] = Q(1, 8);
        scalings.push_back(s);
    }
    std::vector<NFElement> found;
    std::vector<std::vector<RBall>> logs;
    std::set<std::string> seen;
    auto consider = [&](const NFElement& u) {
        if (abs(u.norm()) != 1) return;
        std::string key = u.str();
        std::string key_inv = u.inv().str();
        std::string key_neg = (-u).str();
        std::string key_ninv = (-(u.inv())).str();
        if (seen.count(key) || seen.count(key_inv) || seen.count(key_neg) ||
            seen.count(key_ninv))
            return;
        seen.insert(key);
        auto lv = log_vector(u, 256);
        bool torsionish = true;
        for (const RBall& l : lv)
            if (abs(l.c) > 1e-10) torsionish = false;
        if (torsionish) return;
        auto trial = logs;
        trial.push_back(lv);
        if (log_rank(trial) > log_rank(logs)) {
            logs = trial;
            found.push_back(u);
        }
    };
    double dd = std::abs(K->field_disc.get_d());
    for (int scale = 1; scale <= 1 << 12 && (int)found.size() < target_rank; scale <<= 2) {
        for (const auto& s : scalings) {
            QMat G = gram_t2(basis, s, 192);
            ZMat U;
            lll_gram(G, U, Q(3, 4));
            Q C = Q(n) * Q((long)std::ceil(std::pow(dd, 1.0 / n))) * scale;
            long budget = 200000;
            fincke_pohst(G, C, [&](const std::vector<Z>& x, const Q&) {
                QVec ic(n, Q(0));
                for (int j = 0; j < n; j++)
                    for (int i = 0; i < n; i++) ic[i] += Q(U[i][j]) * Q(x[j]);
                consider(NFElement::from_integral(K, ic));
                return --budget > 0 && (int)found.size() < target_rank + 2;
            });
            if ((int)found.size() >= target_rank) break;
        }
    }
    // saturate at 2 and 3: replace products that are p-th powers
    for (int p : {2, 3}) {
        int r = (int)found.size();
        if (r == 0 || r > 5) break;
        bool changed = true;
        int rounds = 0;
        while (changed && rounds++ < 8) {
            changed = false;
            std::vector<int> e(r, 0);
            while (true) {
                int i = 0;
                while (i < r && e[i] == p - 1) e[i++] = 0;
                if (i == r) break;
                e[i]++;
                int lead = -1;
                for (int j = 0; j < r; j++)
                    if (e[j] == 1) lead = j;
                if (lead < 0) continue;  // ensure some exponent 1 for replacement
                NFElement u = NFElement::one(K);
                for (int j = 0; j < r; j++)
                    if (e[j]) u = u * found[j].pow(e[j]);
                auto root = pth_root_in_field(u, p);
                if (!root && K->r1 > 0) root = pth_root_in_field(-u, p);
                if (root) {
                    found[lead] = *root;
                    changed = true;
                    break;
                }
            }
        }
    }
    return found;
}

}  // namespace

UnitGroup unit_group(NFPtr K) {
    UnitGroup U;
    U.K = K;
    compute_torsion(U);
    if (K->unit_rank() == 0) {
        U.cert = UnitCertification::CertifiedFundamental;
        return U;
    }
    if (K->n == 2 && K->r1 == 2) {
        U.gens.push_back(fundamental_unit_quadratic_in(K));
        U.cert = UnitCertification::CertifiedFundamental;
        return U;
    }
    U.gens = heuristic_unit_search(K, K->unit_rank());
    U.cert = UnitCertification::Heuristic;
    return U;
}

UnitGroup unit_group_supplied(NFPtr K, const std::vector<QVec>& integral_coords,
                              bool certified) {
    UnitGroup U;
    U.K = K;
    compute_torsion(U);
    std::vector<std::vector<RBall>> logs;
    for (const QVec& c : integral_coords) {
        NFElement u = NFElement::from_integral(K, c);
        if (abs(u.norm()) != 1)
            throw std::domain_error("supplied unit is not a unit: " + u.str());
        logs.push_back(log_vector(u, 256));
        if (log_rank(logs) != (int)logs.size())
            throw std::domain_error("supplied units are multiplicatively dependent");
        U.gens.push_back(u);
    }
    U.cert = certified ? UnitCertification::Supplied : UnitCertification::Heuristic;
    return U;
}

std::vector<NFElement> units_of_height_up_to(const UnitGroup& U, const Q& B) {
    std::vector<NFElement> out;
    if (B < 1) return out;
    NFPtr K = U.K;
    std::vector<NFElement> tor = U.torsion_units();
    std::set<std::string> seen;
    auto push = [&](const NFElement& u) {
        std::string key = u.str();
        if (seen.insert(key).second) out.push_back(u);
    };
    for (const NFElement& t : tor) push(t);
    int r = U.rank();
    if (r == 0 || B == 1) return out;
    unsigned prec = 256;
    std::vector<std::vector<RBall>> lv;
    for (const NFElement& g : U.gens) lv.push_back(log_vector(g, prec));
    QMat G(r, QVec(r, Q(0)));
    for (int i = 0; i < r; i++)
        for (int j = i; j < r; j++) {
            RBall s(mpf_class(0, prec));
            for (size_t v = 0; v < lv[i].size(); v++) s = s + lv[i][v] * lv[j][v];
            G[i][j] = G[j][i] = q_from_mpf(s.c, 48);
        }
    ZMat T;
    lll_gram(G, T, Q(3, 4));
    // ball radius^2 = 2 (log B)^2, inflated to absorb the dyadic rounding
    RBall lb = rball_log(RBall(B, prec));
    mpf_class hi = lb.c + lb.r;
    Q logB = q_from_mpf(hi, 48);
    Q C = 2 * logB * logB * Q(525, 512) + Q(1, 1024);
    std::vector<std::pair<std::vector<Z>, NFElement>> hits;
    fincke_pohst(G, C, [&](const std::vector<Z>& x, const Q&) {
        NFElement u = NFElement::one(K);
        // exponents in the original generators: e = T x
        std::vector<long> e(r, 0);
        for (int i = 0; i < r; i++) {
            Z s = 0;
            for (int j = 0; j < r; j++) s += T[i][j] * x[j];
            e[i] = s.get_si();
        }
        for (int i = 0; i < r; i++)
            if (e[i] != 0) u = u * U.gens[i].pow(e[i]);
        if (height_leq(u, B)) {
            NFElement ui = u.inv();
            for (const NFElement& t : tor) {
                push(t * u);
                push(t * ui);
            }
        }
        return true;
    });
    return out;
}

std::optional<NFElement> principal_generator(const Ideal& I, int max_scale) {
    if (!I.is_integral()) throw std::domain_error("principal_generator: ideal not integral");
    NFPtr K = I.K;
    int n = K->n;
    Z N = I.lattice_norm();
    std::vector<NFElement> basis;
    for (int j = 0; j < n; j++) basis.push_back(I.basis_element(j));
    QMat G = gram_t2(basis, std::vector<Q>((size_t)(K->r1 + K->r2), Q(1)), 192);
    ZMat U;
    lll_gram(G, U, Q(3, 4));
    double dd = std::abs(K->field_disc.get_d());
    double nn = N.get_d();
    double base = n * std::pow(std::sqrt(dd) * nn, 2.0 / n);
    std::optional<NFElement> best;
    for (int scale = 1; scale <= max_scale && !best; scale *= 4) {
        Q C = Q((long)std::ceil(base * scale)) + n;
        fincke_pohst(G, C, [&](const std::vector<Z>& x, const Q&) {
            NFElement xi = NFElement::zero(K);
            for (int j = 0; j < n; j++) {
                if (x[j] == 0) continue;
                NFElement col = NFElement::zero(K);
                for (int i = 0; i < n; i++)
                    if (U[i][j] != 0) col = col + basis[i] * Q(U[i][j]);
                xi = xi + col * Q(x[j]);
            }
            if (abs(xi.norm()) == Q(N)) {
                if (!ideal_eq(ideal_principal(xi), I))
                    throw std::logic_error("principal_generator: norm matched, ideal did not");
                best = xi;
                return false;
            }
            return true;
        });
    }
    return best;
}

NFElement unit_reduce(const NFElement& x, const UnitGroup& U) {
    int r = U.rank();
    if (r == 0 || x.is_zero()) return x;
    NFPtr K = x.K;
    std::vector<int> w = K->embedding_weights();
    int m = (int)w.size();
    auto logv = [&](const NFElement& y) {
        std::vector<double> v((size_t)m);
        auto e = y.embed(128);
        for (int i = 0; i < m; i++) v[i] = w[i] * std::log(e[i].abs_ball().mid_d());
        return v;
    };
    // project out the all-ones direction so only the unit-lattice part remains
    std::vector<double> lx = logv(x);
    double s = 0;
    for (double t : lx) s += t;
    for (int i = 0; i < m; i++) lx[i] -= s * w[i] / K->n;
    std::vector<std::vector<double>> g((size_t)r);
    for (int i = 0; i < r; i++) g[i] = logv(U.gens[i]);
    // normal equations, double precision is plenty for rounding
    std::vector<std::vector<double>> A((size_t)r, std::vector<double>((size_t)r + 1, 0));
    for (int i = 0; i < r; i++) {
        for (int j = 0; j < r; j++)
            for (int v = 0; v < m; v++) A[i][j] += g[i][v] * g[j][v];
        for (int v = 0; v < m; v++) A[i][r] += g[i][v] * lx[v];
    }
    for (int col = 0; col < r; col++) {
        int piv = col;
        for (int i = col + 1; i < r; i++)
            if (std::abs(A[i][col]) > std::abs(A[piv][col])) piv = i;
        std::swap(A[col], A[piv]);
        if (std::abs(A[col][col]) < 1e-12) return x;  // degenerate, leave as is
        for (int i = 0; i < r; i++) {
            if (i == col) continue;
            double f = A[i][col] / A[col][col];
            for (int j = col; j <= r; j++) A[i][j] -= f * A[col][j];
        }
    }
    NFElement out = x;
    for (int i = 0; i < r; i++) {
        long k = std::lround(A[i][r] / A[i][i]);
        if (k != 0) out = out * U.gens[i].pow(-k);
    }
    return out;
}

std::optional<NFElement> principal_generator_factored(const Ideal& I, const UnitGroup& U) {
    if (!I.is_integral())
        throw std::domain_error("principal_generator_factored: ideal not integral");
    NFPtr K = I.K;
    Z N = I.lattice_norm();
    if (N == 1) return NFElement::one(K);
    Z unfac;
    auto fac = factor_integer(N, unfac);
    if (unfac != 1) return std::nullopt;
    NFElement g = NFElement::one(K);
    for (auto& [p, e] : fac) {
        (void)e;
        for (const PrimeIdeal& P : prime_decomposition(K, p)) {
            int v = 0;
            Ideal Pk = P.p;
            while (ideal_eq(ideal_add(I, Pk), Pk)) {  // I inside P^{v+1}
                v++;
                Pk = ideal_mul(Pk, P.p);
            }
            if (v == 0) continue;
            auto gp = principal_generator(P.p);
            if (!gp) gp = principal_generator(P.p, 1 << 12);
            if (!gp) return std::nullopt;
            g = unit_reduce(g * unit_reduce(*gp, U).pow(v), U);
        }
    }
    if (!ideal_eq(ideal_principal(g), I))
        throw std::logic_error("principal_generator_factored: product ideal mismatch");
    return g;
}

}  // namespace egr
