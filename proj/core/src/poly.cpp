#include "egr/poly.hpp"

#include <sstream>

namespace egr {

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Q> r(std::max(c.size(), o.c.size()), Q(0));
    for (size_t i = 0; i < c.size(); i++) r[i] += c[i];
    for (size_t i = 0; i < o.c.size(); i++) r[i] += o.c[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<Q> r(std::max(c.size(), o.c.size()), Q(0));
    for (size_t i = 0; i < c.size(); i++) r[i] += c[i];
    for (size_t i = 0; i < o.c.size(); i++) r[i] -= o.c[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-() const {
    std::vector<Q> r(c.size());
    for (size_t i = 0; i < c.size(); i++) r[i] = -c[i];
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Q> r(c.size() + o.c.size() - 1, Q(0));
    for (size_t i = 0; i < c.size(); i++) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); j++) r[i + j] += c[i] * o.c[j];
    }
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const Q& s) const {
    if (s == 0) return QPoly();
    std::vector<Q> r(c.size());
    for (size_t i = 0; i < c.size(); i++) r[i] = c[i] * s;
    return QPoly(std::move(r));
}

Q QPoly::eval(const Q& x) const {
    Q r = 0;
    for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
    return r;
}

RBall QPoly::eval(const RBall& x) const {
    RBall r(Q(0), x.prec());
    for (size_t i = c.size(); i-- > 0;) r = r * x + RBall(c[i], x.prec());
    return r;
}

CBall QPoly::eval(const CBall& x) const {
    unsigned p = x.re.prec();
    CBall r(RBall(Q(0), p), RBall(Q(0), p));
    for (size_t i = c.size(); i-- > 0;)
        r = r * x + CBall(RBall(c[i], p), RBall(Q(0), p));
    return r;
}

QPoly QPoly::derivative() const {
    if (c.size() <= 1) return QPoly();
    std::vector<Q> r(c.size() - 1);
    for (size_t i = 1; i < c.size(); i++) r[i - 1] = c[i] * Q((long)i);
    return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (1 / lc());
}

QPoly QPoly::scale_arg(const Q& a) const {
    std::vector<Q> r(c.size());
    Q p = 1;
    for (size_t i = 0; i < c.size(); i++) {
        r[i] = c[i] * p;
        p *= a;
    }
    return QPoly(std::move(r));
}

QPoly QPoly::shift_arg(const Q& a) const {
    // Horner on polynomial coefficients.
    QPoly r;
    QPoly xa({a, Q(1)});
    for (size_t i = c.size(); i-- > 0;) r = r * xa + QPoly::constant(c[i]);
    return r;
}

QPoly QPoly::reverse() const {
    std::vector<Q> r(c.rbegin(), c.rend());
    return QPoly(std::move(r));
}

QPoly QPoly::compose(const QPoly& g) const {
    QPoly r;
    for (size_t i = c.size(); i-- > 0;) r = r * g + QPoly::constant(c[i]);
    return r;
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; i--) {
        Q a = coeff(i);
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        else if (a < 0) os << "-";
        Q aa = abs(a);
        if (aa != 1 || i == 0) os << aa.get_str();
        if (i > 0) {
            if (aa != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

void qpoly_divrem(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
    if (b.is_zero()) throw std::domain_error("qpoly_divrem by zero");
    rem = a;
    quo = QPoly();
    std::vector<Q> q(std::max(0, a.deg() - b.deg() + 1), Q(0));
    Q binv = 1 / b.lc();
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
        int k = rem.deg() - b.deg();
        Q f = rem.lc() * binv;
        q[k] = f;
        for (int i = 0; i <= b.deg(); i++) rem.c[i + k] -= f * b.c[i];
        rem.trim();
    }
    quo = QPoly(std::move(q));
}

QPoly qpoly_gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly q, r;
        qpoly_divrem(x, y, q, r);
        x = y;
        y = r;
    }
    return x.is_zero() ? x : x.monic();
}

Q qpoly_resultant(const QPoly& a, const QPoly& b) {
    // Euclidean algorithm with the standard transformation rules.
    if (a.is_zero() || b.is_zero()) return Q(0);
    QPoly f = a, g = b;
    Q res = 1;
    bool swapped = false;
    if (f.deg() < g.deg()) {
        std::swap(f, g);
        if ((f.deg() * g.deg()) % 2 == 1) res = -res;
    }
    (void)swapped;
    while (g.deg() > 0) {
        QPoly q, r;
        qpoly_divrem(f, g, q, r);
        if (r.is_zero()) return Q(0);
        res *= qpow(g.lc(), f.deg() - r.deg());
        if ((f.deg() * g.deg()) % 2 == 1) res = -res;
        f = g;
        g = r;
    }
    res *= qpow(g.c[0], f.deg());
    return res;
}

Q qpoly_discriminant(const QPoly& f) {
    if (f.deg() < 1) throw std::domain_error("discriminant of constant");
    Q r = qpoly_resultant(f, f.derivative()) / f.lc();
    int n = f.deg();
    if (((long)n * (n - 1) / 2) % 2 == 1) r = -r;
    return r;
}

std::vector<Z> qpoly_primitive_z(const QPoly& f, Z& den) {
    den = 1;
    for (const Q& a : f.c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), zden(a).get_mpz_t());
    std::vector<Z> out(f.c.size());
    Z content = 0;
    for (size_t i = 0; i < f.c.size(); i++) {
        Q v = f.c[i] * Q(den);
        out[i] = znum(v);
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
    }
    if (content > 1) {
        for (Z& v : out) v /= content;
        // keep den consistent: original = out * content / den
        Q scale = Q(content) / Q(den);
        den = zden(scale);
    }
    return out;
}

QPoly qpoly_from_z(const std::vector<Z>& c) {
    std::vector<Q> r(c.size());
    for (size_t i = 0; i < c.size(); i++) r[i] = Q(c[i]);
    return QPoly(std::move(r));
}

SturmChain::SturmChain(const QPoly& f) {
    seq.push_back(f);
    seq.push_back(f.derivative());
    while (!seq.back().is_zero() && seq.back().deg() > 0) {
        QPoly q, r;
        qpoly_divrem(seq[seq.size() - 2], seq.back(), q, r);
        if (r.is_zero()) break;
        seq.push_back(-r);
    }
    if (seq.back().is_zero()) seq.pop_back();
}

static int qsign(const Q& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int SturmChain::sign_changes_at(const Q& x) const {
    int changes = 0, last = 0;
    for (const QPoly& p : seq) {
        int s = qsign(p.eval(x));
        if (s != 0) {
            if (last != 0 && s != last) changes++;
            last = s;
        }
    }
    return changes;
}

int SturmChain::sign_changes_at_inf(int sign) const {
    int changes = 0, last = 0;
    for (const QPoly& p : seq) {
        if (p.is_zero()) continue;
        int s = qsign(p.lc());
        if (sign < 0 && p.deg() % 2 == 1) s = -s;
        if (s != 0) {
            if (last != 0 && s != last) changes++;
            last = s;
        }
    }
    return changes;
}

int SturmChain::count_roots(const Q& a, const Q& b) const {
    return sign_changes_at(a) - sign_changes_at(b);
}

int SturmChain::count_real_roots() const {
    return sign_changes_at_inf(-1) - sign_changes_at_inf(+1);
}

Q root_bound(const QPoly& f) {
    if (f.deg() < 1) return Q(1);
    Q m = 0;
    for (int i = 0; i < f.deg(); i++) {
        Q v = abs(f.c[i] / f.lc());
        if (v > m) m = v;
    }
    return m + 1;
}

QPoly squarefree_part(const QPoly& f) {
    if (f.deg() <= 1) return f.monic();
    QPoly g = qpoly_gcd(f, f.derivative());
    if (g.deg() == 0) return f.monic();
    QPoly q, r;
    qpoly_divrem(f, g, q, r);
    return q.monic();
}

std::vector<std::pair<Q, Q>> isolate_real_roots(const QPoly& f, const Q& tol) {
    std::vector<std::pair<Q, Q>> out;
    if (f.deg() < 1) return out;
    SturmChain ch(f);
    Q bound = root_bound(f);
    struct Item { Q a, b; int n; };
    std::vector<Item> work;
    int total = ch.count_roots(-bound, bound);
    if (total > 0) work.push_back({-bound, bound, total});
    while (!work.empty()) {
        Item it = work.back();
        work.pop_back();
        if (it.n == 1 && it.b - it.a <= tol) {
            out.push_back({it.a, it.b});
            continue;
        }
        Q mid = (it.a + it.b) / 2;
        // Nudge the midpoint off a root so intervals stay half open cleanly.
        while (f.eval(mid) == 0) mid = (it.a + 2 * mid) / 3 + (it.b - it.a) / 1000000;
        int left = ch.count_roots(it.a, mid);
        if (left > 0) work.push_back({it.a, mid, left});
        if (it.n - left > 0) work.push_back({mid, it.b, it.n - left});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

std::string RBall::str(int digits) const {
    mp_exp_t e;
    std::string s = c.get_str(e, 10, digits);
    std::ostringstream os;
    bool neg = !s.empty() && s[0] == '-';
    if (neg) s = s.substr(1);
    if (s.empty()) s = "0";
    os << (neg ? "-" : "") << "0." << s << "e" << e;
    return os.str();
}

RBall rball_sqrt(const RBall& b) {
    if (b.c < 0 && !b.contains_zero()) throw std::domain_error("rball_sqrt of negative");
    mpf_class lo = b.c - b.r, hi = b.c + b.r;
    if (lo < 0) lo = 0;
    mpf_class slo(0, b.c.get_prec()), shi(0, b.c.get_prec());
    mpf_sqrt(slo.get_mpf_t(), lo.get_mpf_t());
    mpf_sqrt(shi.get_mpf_t(), hi.get_mpf_t());
    mpf_class slack(0, b.c.get_prec());
    mpf_div_2exp(slack.get_mpf_t(), shi.get_mpf_t(),
                 b.c.get_prec() > 8 ? b.c.get_prec() - 4 : 4);
    RBall x((slo + shi) / 2, (shi - slo) / 2 + slack);
    x.bump();
    return x;
}

RBall rball_log(const RBall& b) {
    if (!(b.c - b.r > 0)) throw std::domain_error("rball_log needs positive ball");
    unsigned prec = b.prec();
    // log via atanh series after range reduction by powers of 2:
    // v = m * 2^k with m in [2/3, 4/3); log v = log m + k log 2.
    auto log_core = [prec](const mpf_class& v) {
        mpf_class m = v;
        long k = 0;
        while (m > mpf_class(4) / 3) { m /= 2; k++; }
        while (m < mpf_class(2) / 3) { m *= 2; k--; }
        mpf_class t = (m - 1) / (m + 1);
        mpf_class t2 = t * t, term = t, sum(0, prec);
        for (long n = 1; ; n += 2) {
            sum += term / n;
            term *= t2;
            mpf_class a = abs(term);
            mpf_class eps(0, prec);
            mpf_set_ui(eps.get_mpf_t(), 1);
            mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec + 8);
            if (a < eps) break;
        }
        sum *= 2;
        if (k != 0) {
            // log 2 = 2 atanh(1/3)
            mpf_class u = mpf_class(1) / 3, u2 = u * u, tm = u, l2(0, prec);
            for (long n = 1;; n += 2) {
                l2 += tm / n;
                tm *= u2;
                mpf_class eps(0, prec);
                mpf_set_ui(eps.get_mpf_t(), 1);
                mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec + 8);
                if (tm < eps) break;
            }
            sum += 2 * l2 * k;
        }
        return sum;
    };
    mpf_class lo = log_core(b.c - b.r), hi = log_core(b.c + b.r);
    RBall x((lo + hi) / 2, (hi - lo) / 2);
    x.bump();
    // series truncation and rounding margin
    mpf_class eps(0, prec);
    mpf_set_ui(eps.get_mpf_t(), 1);
    mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec > 16 ? prec - 8 : 8);
    x.r += eps * (abs(x.c) + 1);
    return x;
}

}  // namespace egr
