#pragma once

#include <vector>

#include "egr/ball.hpp"
#include "egr/util.hpp"

namespace egr {

/// Dense univariate polynomial over Q, coefficients low to high.
struct QPoly {
    std::vector<Q> c;

    QPoly() = default;
    explicit QPoly(std::vector<Q> coeffs) : c(std::move(coeffs)) { trim(); }
    static QPoly constant(const Q& a) { return QPoly({a}); }
    static QPoly xpow(int k) {
        std::vector<Q> v(k + 1, Q(0));
        v[k] = 1;
        return QPoly(std::move(v));
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Q& lc() const { return c.back(); }
    Q coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : Q(0); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    bool operator==(const QPoly& o) const { return c == o.c; }

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator-() const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Q& s) const;

    Q eval(const Q& x) const;
    RBall eval(const RBall& x) const;
    CBall eval(const CBall& x) const;

    QPoly derivative() const;
    QPoly monic() const;
    /// Substitute x -> a*x (coefficient c_i -> c_i * a^i).
    QPoly scale_arg(const Q& a) const;
    /// Substitute x -> x + a.
    QPoly shift_arg(const Q& a) const;
    /// x^n f(1/x) for n = deg f.
    QPoly reverse() const;
    QPoly compose(const QPoly& g) const;

    std::string str(const std::string& var = "x") const;
};

void qpoly_divrem(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem);
QPoly qpoly_gcd(const QPoly& a, const QPoly& b);  // monic
Q qpoly_resultant(const QPoly& a, const QPoly& b);
Q qpoly_discriminant(const QPoly& f);

/// Clear denominators: f = (Z-polynomial with content 1) / den, sign of lc kept.
std::vector<Z> qpoly_primitive_z(const QPoly& f, Z& den);
QPoly qpoly_from_z(const std::vector<Z>& c);

/// Sturm sequence of a squarefree polynomial.
struct SturmChain {
    std::vector<QPoly> seq;
    explicit SturmChain(const QPoly& f);
    int sign_changes_at(const Q& x) const;
    int sign_changes_at_inf(int sign) const;  // sign = +1 or -1
    /// Number of real roots in (a, b].
    int count_roots(const Q& a, const Q& b) const;
    int count_real_roots() const;
};

/// Isolating intervals (a_i, b_i] for all real roots of a squarefree f,
/// sorted increasingly, each refined to width <= tol.
std::vector<std::pair<Q, Q>> isolate_real_roots(const QPoly& f, const Q& tol);

/// Cauchy bound: all complex roots have |z| < bound.
Q root_bound(const QPoly& f);

QPoly squarefree_part(const QPoly& f);

}  // namespace egr
