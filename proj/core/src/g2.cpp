#include "egr/g2.hpp"

#include <cmath>
#include <stdexcept>

namespace egr {

FPoly fpoly_trim(FPoly f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
    return f;
}

int fpoly_deg(const FPoly& f) {
    for (int i = (int)f.size() - 1; i >= 0; i--)
        if (!f[i].is_zero()) return i;
    return -1;
}

FPoly fpoly_add(const FPoly& a, const FPoly& b) {
    if (a.empty()) return fpoly_trim(b);
    if (b.empty()) return fpoly_trim(a);
    NFPtr F = a[0].K;
    FPoly r(std::max(a.size(), b.size()), NFElement::zero(F));
    for (size_t i = 0; i < a.size(); i++) r[i] = r[i] + a[i];
    for (size_t i = 0; i < b.size(); i++) r[i] = r[i] + b[i];
    return fpoly_trim(r);
}

FPoly fpoly_mul(const FPoly& a, const FPoly& b) {
    if (a.empty() || b.empty()) return {};
    NFPtr F = a[0].K;
    FPoly r(a.size() + b.size() - 1, NFElement::zero(F));
    for (size_t i = 0; i < a.size(); i++)
        for (size_t j = 0; j < b.size(); j++) r[i + j] = r[i + j] + a[i] * b[j];
    return fpoly_trim(r);
}

FPoly fpoly_scal(const FPoly& a, const NFElement& s) {
    FPoly r;
    r.reserve(a.size());
    for (const NFElement& c : a) r.push_back(c * s);
    return fpoly_trim(r);
}

FPoly fpoly_derivative(const FPoly& a) {
    FPoly r;
    for (size_t i = 1; i < a.size(); i++) r.push_back(a[i] * Q((long)i));
    return fpoly_trim(r);
}

NFElement fpoly_eval(const FPoly& a, const NFElement& x) {
    NFElement r = NFElement::zero(x.K);
    for (int i = (int)a.size() - 1; i >= 0; i--) r = r * x + a[i];
    return r;
}

static FPoly fpoly_rem(FPoly a, const FPoly& b) {
    int db = fpoly_deg(b);
    NFElement lcb_inv = b[db].inv();
    while (fpoly_deg(a) >= db) {
        int da = fpoly_deg(a);
        NFElement c = a[da] * lcb_inv;
        for (int i = 0; i <= db; i++) a[da - db + i] = a[da - db + i] - c * b[i];
        a = fpoly_trim(a);
    }
    return a;
}

NFElement fpoly_resultant(FPoly a, FPoly b) {
    a = fpoly_trim(a);
    b = fpoly_trim(b);
    if (a.empty() || b.empty()) throw std::domain_error("fpoly_resultant: zero polynomial");
    NFPtr F = a[0].K;
    NFElement res = NFElement::one(F);
    while (true) {
        int da = fpoly_deg(a), db = fpoly_deg(b);
        if (db == 0) return res * b[0].pow(da);
        FPoly r = fpoly_rem(a, b);
        if (r.empty()) return NFElement::zero(F);
        int dr = fpoly_deg(r);
        if ((da & 1) && (db & 1)) res = -res;
        res = res * b[db].pow(da - dr);
        a = b;
        b = r;
    }
}

NFElement fpoly_discriminant(const FPoly& f) {
    FPoly g = fpoly_trim(f);
    int n = fpoly_deg(g);
    if (n < 1) throw std::domain_error("fpoly_discriminant: degree < 1");
    NFElement res = fpoly_resultant(g, fpoly_derivative(g));
    NFElement d = res / g[n];
    if (((n * (n - 1)) / 2) & 1) d = -d;
    return d;
}

FPoly complete_square_sextic(const GenusTwoModel& m) {
    FPoly f = fpoly_add(fpoly_mul(m.Q, m.Q), fpoly_scal(m.P, NFElement::from_q(m.F, 4)));
    int d = fpoly_deg(f);
    if (d != 5 && d != 6) throw std::domain_error("complete_square_sextic: degree not 5 or 6");
    if (fpoly_discriminant(f).is_zero())
        throw std::domain_error("complete_square_sextic: singular model");
    return f;
}

static NFElement disc6(const FPoly& f) {
    int d = fpoly_deg(f);
    NFElement disc = fpoly_discriminant(f);
    if (d == 5) disc = disc * f[5] * f[5];
    return disc;
}

NFElement curve_discriminant(const GenusTwoModel& m) {
    FPoly f = complete_square_sextic(m);
    return disc6(f) * Q(1, 4096);
}

namespace {

struct ICTerm {
    long c;
    int idx[6];  // index multiset, unused slots < 0
};

const ICTerm kI2[] = {
    {-240, {0, 6, -1}}, {40, {1, 5, -1}}, {-16, {2, 4, -1}}, {6, {3, 3, -1}}};

const ICTerm kI4[] = {
    {1620, {0, 0, 6, 6, -1}}, {-540, {0, 1, 5, 6, -1}}, {-504, {0, 2, 4, 6, -1}},
    {300, {0, 2, 5, 5, -1}},  {324, {0, 3, 3, 6, -1}},  {-180, {0, 3, 4, 5, -1}},
    {48, {0, 4, 4, 4, -1}},   {300, {1, 1, 4, 6, -1}},  {-80, {1, 1, 5, 5, -1}},
    {-180, {1, 2, 3, 6, -1}}, {4, {1, 2, 4, 5, -1}},    {36, {1, 3, 3, 5, -1}},
    {-12, {1, 3, 4, 4, -1}},  {48, {2, 2, 2, 6, -1}},   {-12, {2, 2, 3, 5, -1}},
    {4, {2, 2, 4, 4, -1}}};

const ICTerm kI6[] = {
    {-59940, {0, 0, 0, 6, 6, 6}}, {29970, {0, 0, 1, 5, 6, 6}},
    {10332, {0, 0, 2, 4, 6, 6}},  {-9300, {0, 0, 2, 5, 5, 6}},
    {-5022, {0, 0, 3, 3, 6, 6}},  {1530, {0, 0, 3, 4, 5, 6}},
    {1125, {0, 0, 3, 5, 5, 5}},   {-48, {0, 0, 4, 4, 4, 6}},
    {-450, {0, 0, 4, 4, 5, 5}},   {-9300, {0, 1, 1, 4, 6, 6}},
    {-1120, {0, 1, 1, 5, 5, 6}},  {1530, {0, 1, 2, 3, 6, 6}},
    {1736, {0, 1, 2, 4, 5, 6}},   {800, {0, 1, 2, 5, 5, 5}},
    {909, {0, 1, 3, 3, 5, 6}},    {-438, {0, 1, 3, 4, 4, 6}},
    {-930, {0, 1, 3, 4, 5, 5}},   {308, {0, 1, 4, 4, 4, 5}},
    {-48, {0, 2, 2, 2, 6, 6}},    {-438, {0, 2, 2, 3, 5, 6}},
    {212, {0, 2, 2, 4, 4, 6}},    {-320, {0, 2, 2, 4, 5, 5}},
    {-234, {0, 2, 3, 3, 4, 6}},   {165, {0, 2, 3, 3, 5, 5}},
    {246, {0, 2, 3, 4, 4, 5}},    {-80, {0, 2, 4, 4, 4, 4}},
    {81, {0, 3, 3, 3, 3, 6}},     {-99, {0, 3, 3, 3, 4, 5}},
    {30, {0, 3, 3, 4, 4, 4}},     {1125, {1, 1, 1, 3, 6, 6}},
    {800, {1, 1, 1, 4, 5, 6}},    {-160, {1, 1, 1, 5, 5, 5}},
    {-450, {1, 1, 2, 2, 6, 6}},   {-930, {1, 1, 2, 3, 5, 6}},
    {-320, {1, 1, 2, 4, 4, 6}},   {32, {1, 1, 2, 4, 5, 5}},
    {165, {1, 1, 3, 3, 4, 6}},    {88, {1, 1, 3, 3, 5, 5}},
    {13, {1, 1, 3, 4, 4, 5}},     {-18, {1, 1, 4, 4, 4, 4}},
    {308, {1, 2, 2, 2, 5, 6}},    {246, {1, 2, 2, 3, 4, 6}},
    {13, {1, 2, 2, 3, 5, 5}},     {14, {1, 2, 2, 4, 4, 5}},
    {-99, {1, 2, 3, 3, 3, 6}},    {-119, {1, 2, 3, 3, 4, 5}},
    {38, {1, 2, 3, 4, 4, 4}},     {36, {1, 3, 3, 3, 3, 5}},
    {-12, {1, 3, 3, 3, 4, 4}},    {-80, {2, 2, 2, 2, 4, 6}},
    {-18, {2, 2, 2, 2, 5, 5}},    {30, {2, 2, 2, 3, 3, 6}},
    {38, {2, 2, 2, 3, 4, 5}},     {-12, {2, 2, 2, 4, 4, 4}},
    {-12, {2, 2, 3, 3, 3, 5}},    {4, {2, 2, 3, 3, 4, 4}}};

template <size_t N>
NFElement ic_eval(const ICTerm (&terms)[N], const std::vector<NFElement>& a, NFPtr F) {
    NFElement s = NFElement::zero(F);
    for (const ICTerm& t : terms) {
        NFElement p = NFElement::from_q(F, Q(t.c));
        for (int k = 0; k < 6 && t.idx[k] >= 0; k++) p = p * a[t.idx[k]];
        s = s + p;
    }
    return s;
}

}  // namespace

IgusaClebsch igusa_clebsch(const FPoly& f) {
    FPoly g = fpoly_trim(f);
    int d = fpoly_deg(g);
    if (d != 5 && d != 6) throw std::domain_error("igusa_clebsch: degree not 5 or 6");
    NFPtr F = g[0].K;
    std::vector<NFElement> a(7, NFElement::zero(F));
    for (int i = 0; i <= d; i++) a[i] = g[i];
    IgusaClebsch ic;
    ic.I2 = ic_eval(kI2, a, F);
    ic.I4 = ic_eval(kI4, a, F);
    ic.I6 = ic_eval(kI6, a, F);
    ic.I10 = disc6(g);
    return ic;
}

NFElement elliptic_discriminant(const EllipticModel& e) {
    NFElement b2 = e.a1 * e.a1 + e.a2 * Q(4);
    NFElement b4 = e.a4 * Q(2) + e.a1 * e.a3;
    NFElement b6 = e.a3 * e.a3 + e.a6 * Q(4);
    NFElement b8 = e.a1 * e.a1 * e.a6 + e.a2 * e.a6 * Q(4) - e.a1 * e.a3 * e.a4 +
                   e.a2 * e.a3 * e.a3 - e.a4 * e.a4;
    return -(b2 * b2 * b8) - b4.pow(3) * Q(8) - b6 * b6 * Q(27) + b2 * b4 * b6 * Q(9);
}

Z point_count_from_eigenvalue(const Z& Np, const NFElement& a) {
    NFElement x = NFElement::from_q(a.K, Q(Np) + 1) - a;
    Q n = x.norm();
    if (!is_int(n)) throw std::logic_error("point_count_from_eigenvalue: non-integral norm");
    return znum(n);
}

std::optional<bool> two_torsion_obstruction(const std::vector<Z>& counts) {
    if (counts.empty()) return std::nullopt;
    for (const Z& n : counts)
        if (mpz_odd_p(n.get_mpz_t())) return true;
    return false;
}

bool is_square_in_field(const NFElement& x, NFElement* root) {
    NFPtr F = x.K;
    if (F->n > 2) throw std::domain_error("is_square_in_field: degree > 2 unsupported");
    if (x.is_zero()) {
        if (root) *root = NFElement::zero(F);
        return true;
    }
    if (F->n == 1) {
        Q r;
        if (!rational_square(x.a[0], r)) return false;
        if (root) *root = NFElement::from_q(F, r);
        return true;
    }
    Q p = F->f.coeff(1), q = F->f.coeff(0);
    Q n2, r;
    n2 = x.norm();
    if (!rational_square(n2, r)) return false;
    // y^2 = x forces N(y) = +-sqrt(N(x)) and (y + conj y)^2 = Tr(x) + 2 N(y)
    for (int sgn = 0; sgn < 2; sgn++) {
        Q m = sgn ? -r : r;
        Q s;
        if (!rational_square(x.trace() + 2 * m, s)) continue;
        NFElement xbar(F, {x.a[0] - x.a[1] * p, -x.a[1]});
        if (s != 0) {
            NFElement y = (NFElement::from_q(F, s) + (x - xbar) * (1 / s)) * Q(1, 2);
            if (y * y == x) {
                if (root) *root = y;
                return true;
            }
        } else {
            // trace-zero square root: y = v (2t + p), y^2 = v^2 (p^2 - 4q)
            if (!x.is_rational()) continue;
            Q v;
            if (!rational_square(x.a[0] / (p * p - 4 * q), v)) continue;
            if (root) *root = NFElement(F, {v * p, 2 * v});
            return true;
        }
    }
    return false;
}

std::pair<NFElement, bool> humbert5_evaluate(const NFElement& g, const NFElement& h) {
    NFElement g2 = g * g, g3 = g2 * g;
    NFElement z = (h * h * Q(6250) - g2 * h * Q(4500) - g * h * Q(1350) - h * Q(108) -
                   g3 * g2 * Q(972) - g3 * g * Q(324) - g3 * Q(27)) *
                  Q(2);
    return {z, is_square_in_field(z)};
}

std::pair<NFElement, NFElement> scaling_parametrization(int m, int n, const NFElement& gp,
                                                        const NFElement& hp,
                                                        const NFElement& u,
                                                        const NFElement& eps) {
    if (u.is_zero()) throw std::domain_error("scaling_parametrization: u = 0");
    NFElement u2 = u * u;
    NFElement g = eps.pow(m) * gp / (u2 * Q(6));
    NFElement h = eps.pow(n) * hp / (u2 * u2 * u);
    return {g, h};
}

std::pair<double, bool> rootdisc_tower_1997(int r, int s) {
    if (r < 0 || s < 0) throw std::domain_error("rootdisc_tower_1997: negative arguments");
    double delta = 2.0 * std::sqrt(1997.0) * std::pow(2.0, s / std::pow(2.0, r + 1));
    bool below = r >= 62 || Z(s) < (Z(1) << (unsigned long)(r + 1));
    return {delta, below};
}

}  // namespace egr
