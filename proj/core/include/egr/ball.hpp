#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <string>

#include "egr/util.hpp"

namespace egr {

/// Real ball arithmetic over GMP floats: a value known to lie in
/// [center - radius, center + radius].  GMP floats do not round in a
/// directed way, so every operation widens the radius by a few ulps of
/// the working precision; keep a guard margin when choosing precision.
struct RBall {
    mpf_class c, r;

    RBall() : c(0), r(0) {}
    explicit RBall(const mpf_class& center) : c(center), r(0) { bump(); }
    RBall(const mpf_class& center, const mpf_class& radius) : c(center), r(radius) { bump(); }
    explicit RBall(const Q& q, unsigned prec) : c(0, prec), r(0, prec) {
        c = mpf_class(q, prec);
        bump();
    }

    RBall(const RBall&) = default;
    // mpf assignment alone would keep the target's precision and silently
    // round both center and radius; adopt the source precision instead.
    RBall& operator=(const RBall& o) {
        c.set_prec(o.c.get_prec());
        r.set_prec(o.r.get_prec());
        c = o.c;
        r = o.r;
        return *this;
    }

    unsigned prec() const { return static_cast<unsigned>(c.get_prec()); }

    // One-ulp slack for the representation error of c itself.
    void bump() {
        mpf_class ulp(0, c.get_prec());
        mpf_class ac(abs(c));
        if (ac > 0) {
            mpf_div_2exp(ulp.get_mpf_t(), ac.get_mpf_t(), c.get_prec() > 8 ? c.get_prec() - 4 : 4);
            r += ulp;
        }
    }

    RBall operator+(const RBall& o) const { RBall x(c + o.c, r + o.r); return x; }
    RBall operator-(const RBall& o) const { RBall x(c - o.c, r + o.r); return x; }
    RBall operator-() const { return RBall(-c, r); }
    RBall operator*(const RBall& o) const {
        RBall x(c * o.c, abs(c) * o.r + abs(o.c) * r + r * o.r);
        return x;
    }
    RBall& operator+=(const RBall& o) { *this = *this + o; return *this; }
    RBall& operator*=(const RBall& o) { *this = *this * o; return *this; }

    bool contains_zero() const { return abs(c) <= r; }

    RBall inv() const {
        if (contains_zero()) throw std::domain_error("RBall::inv through zero");
        mpf_class lo = abs(c) - r;
        RBall x(1 / c, r / (lo * abs(c)));
        return x;
    }
    RBall operator/(const RBall& o) const { return *this * o.inv(); }

    RBall abs_ball() const {
        RBall x(abs(c), r);
        if (x.c < x.r) {  // straddles zero: |v| in [0, c+r]
            mpf_class hi = x.c + x.r;
            return RBall(hi / 2, hi / 2);
        }
        return x;
    }

    RBall pow_ui(unsigned e) const {
        RBall x(mpf_class(1, prec()));
        RBall b = *this;
        while (e) {
            if (e & 1) x *= b;
            b *= b;
            e >>= 1;
        }
        return x;
    }

    // Certified comparisons: return false when the balls overlap.
    bool gt(const Q& q) const { return c - r > mpf_class(q, prec()); }
    bool lt(const Q& q) const { return c + r < mpf_class(q, prec()); }
    bool gt(const RBall& o) const { return c - r > o.c + o.r; }
    bool lt(const RBall& o) const { return c + r < o.c - o.r; }

    double mid_d() const { return c.get_d(); }
    std::string str(int digits = 12) const;
};

RBall rball_sqrt(const RBall& b);
RBall rball_log(const RBall& b);

/// Complex ball: rectangle [re +/- rad] x [im +/- rad].
struct CBall {
    RBall re, im;

    CBall() = default;
    CBall(const RBall& r_, const RBall& i_) : re(r_), im(i_) {}

    CBall operator+(const CBall& o) const { return {re + o.re, im + o.im}; }
    CBall operator-(const CBall& o) const { return {re - o.re, im - o.im}; }
    CBall operator*(const CBall& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CBall conj() const { return {re, -im}; }
    RBall norm2() const { return re * re + im * im; }  // |z|^2
    RBall abs_ball() const { return rball_sqrt(norm2()); }
    CBall inv() const {
        RBall n = norm2();
        CBall c = conj();
        return {c.re / n, c.im / n};
    }
    CBall operator/(const CBall& o) const { return *this * o.inv(); }
    bool is_real_candidate() const { return im.contains_zero(); }
};

}  // namespace egr
