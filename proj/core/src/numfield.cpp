#include "egr/numfield.hpp"

#include <complex>
#include <map>
#include <mutex>
#include <sstream>

#include "egr/zfactor.hpp"

namespace egr {

// round-2, implemented in order.cpp
QMat maximal_order_basis(const QPoly& f, Z& field_disc, Z& index);

namespace {

QMat qmat_inverse(const QMat& m) {
    int n = (int)m.size();
    QMat aug(n, QVec(2 * n, Q(0)));
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) aug[i][j] = m[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = qmat_rref(aug);
    if ((int)piv.size() != n || piv[n - 1] != n - 1)
        throw std::domain_error("qmat_inverse: singular matrix");
    QMat inv(n, QVec(n));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) inv[i][j] = aug[i][n + j];
    return inv;
}

void qpoly_ext_gcd(const QPoly& a, const QPoly& b, QPoly& g, QPoly& u, QPoly& v) {
    QPoly r0 = a, r1 = b;
    QPoly u0 = QPoly::constant(1), u1;
    QPoly v0, v1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        QPoly q, r;
        qpoly_divrem(r0, r1, q, r);
        QPoly un = u0 - q * u1, vn = v0 - q * v1;
        r0 = r1; r1 = r;
        u0 = u1; u1 = un;
        v0 = v1; v1 = vn;
    }
    g = r0; u = u0; v = v0;
}

struct FieldCache {
    std::mutex mtx;
    std::vector<CBall> roots;
    unsigned prec = 0;
};

std::map<const NumberField*, FieldCache>& cache_map() {
    // leaked on purpose: fields with static storage may outlive an ordinary
    // function-local static during teardown
    static auto* m = new std::map<const NumberField*, FieldCache>;
    return *m;
}
std::mutex cache_map_mtx;

// exact complex point with mpf components, plus helpers
struct CF {
    mpf_class re, im;
    CF(unsigned prec) : re(0, prec), im(0, prec) {}
};

CBall cf_ball(const CF& z) {
    return CBall(RBall(z.re), RBall(z.im));
}

std::vector<CBall> compute_roots(const QPoly& f, int r1, int r2, unsigned prec) {
    int n = f.deg();
    std::vector<CBall> out;
    // real embeddings: Sturm isolation refined below the target radius
    Q tol = Q(1) / Q(zpow(Z(2), prec + 8));
    unsigned wprec = prec + 64;
    for (auto& [a, b] : isolate_real_roots(f, tol)) {
        RBall c(mpf_class(Q((a + b) / 2), wprec), mpf_class(Q((b - a) / 2), wprec));
        out.push_back(CBall(c, RBall(mpf_class(0, wprec))));
    }
    if ((int)out.size() != r1) throw std::runtime_error("embeddings: real root count mismatch");
    if (r2 == 0) return out;

    // complex embeddings: Durand-Kerner in doubles, Newton polish at high
    // precision, then certified Weierstrass disks
    std::vector<double> fc(n + 1);
    for (int i = 0; i <= n; i++) fc[i] = f.coeff(i).get_d();
    std::vector<std::complex<double>> z(n);
    for (int i = 0; i < n; i++)
        z[i] = std::polar(1.3 + 0.01 * i, 0.7 + 2 * 3.14159265358979 * i / n);
    auto evald = [&](std::complex<double> x) {
        std::complex<double> r = 0;
        for (int i = n; i >= 0; i--) r = r * x + fc[i];
        return r;
    };
    for (int it = 0; it < 500; it++) {
        double moved = 0;
        for (int i = 0; i < n; i++) {
            std::complex<double> d = fc[n];
            for (int j = 0; j < n; j++)
                if (j != i) d *= z[i] - z[j];
            std::complex<double> step = evald(z[i]) / d;
            z[i] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-14) break;
    }
    for (int attempt = 0; attempt < 8; attempt++, wprec *= 2) {
        std::vector<CF> zz;
        for (int i = 0; i < n; i++) {
            CF w(wprec);
            w.re = z[i].real();
            w.im = z[i].imag();
            zz.push_back(w);
        }
        std::vector<mpf_class> cf;
        for (int i = 0; i <= n; i++) cf.push_back(mpf_class(f.coeff(i), wprec));
        auto evalf = [&](const CF& x, CF& fx, CF& dfx) {
            fx = CF(wprec); dfx = CF(wprec);
            for (int i = n; i >= 0; i--) {
                // dfx = dfx*x + fx ; fx = fx*x + c_i
                mpf_class t = dfx.re * x.re - dfx.im * x.im + fx.re;
                dfx.im = dfx.re * x.im + dfx.im * x.re + fx.im;
                dfx.re = t;
                t = fx.re * x.re - fx.im * x.im + cf[i];
                fx.im = fx.re * x.im + fx.im * x.re;
                fx.re = t;
            }
        };
        int newton_iters = 3;
        for (unsigned b = 64; b < wprec; b *= 2) newton_iters++;
        for (auto& w : zz) {
            for (int it = 0; it < newton_iters; it++) {
                CF fx(wprec), dfx(wprec);
                evalf(w, fx, dfx);
                mpf_class den = dfx.re * dfx.re + dfx.im * dfx.im;
                if (den == 0) break;
                mpf_class sr = (fx.re * dfx.re + fx.im * dfx.im) / den;
                mpf_class si = (fx.im * dfx.re - fx.re * dfx.im) / den;
                w.re -= sr;
                w.im -= si;
            }
        }
        // certified radii: n |f(z_i)| / |lc| / prod_{j!=i} |z_i - z_j|
        std::vector<RBall> rad(n);
        bool ok = true;
        for (int i = 0; i < n && ok; i++) {
            CBall zi = cf_ball(zz[i]);
            RBall num = f.eval(zi).abs_ball() * RBall(mpf_class(n, wprec));
            RBall den(mpf_class(Q(abs(f.lc())), wprec));
            for (int j = 0; j < n; j++) {
                if (j == i) continue;
                den = den * (zi - cf_ball(zz[j])).abs_ball();
            }
            if (!den.gt(Q(0))) { ok = false; break; }
            rad[i] = num / den;
            rad[i].c += rad[i].r;  // upper bound as plain value
            rad[i].r = 0;
        }
        if (!ok) continue;
        // disks must be pairwise disjoint and complex ones off the real axis
        for (int i = 0; i < n && ok; i++) {
            for (int j = i + 1; j < n; j++) {
                RBall d = (cf_ball(zz[i]) - cf_ball(zz[j])).abs_ball();
                if (!d.gt(rad[i] + rad[j])) { ok = false; break; }
            }
        }
        if (!ok) continue;
        std::vector<int> upper;
        for (int i = 0; i < n; i++) {
            if (zz[i].im > rad[i].c) upper.push_back(i);
        }
        if ((int)upper.size() != r2) continue;
        // accuracy target
        mpf_class target(0, wprec);
        mpf_set_ui(target.get_mpf_t(), 1);
        mpf_div_2exp(target.get_mpf_t(), target.get_mpf_t(), prec + 4);
        for (int i : upper)
            if (rad[i].c > target * (abs(zz[i].re) + abs(zz[i].im) + 1)) ok = false;
        if (!ok) continue;
        std::sort(upper.begin(), upper.end(), [&](int a, int b) {
            if (zz[a].re != zz[b].re) return zz[a].re < zz[b].re;
            return zz[a].im < zz[b].im;
        });
        for (int i : upper) {
            RBall re(zz[i].re, rad[i].c), im(zz[i].im, rad[i].c);
            out.push_back(CBall(re, im));
        }
        return out;
    }
    throw std::runtime_error("embeddings: could not certify complex roots");
}

}  // namespace

NFPtr NumberField::create(const QPoly& f_in, const std::string& label) {
    QPoly f = f_in.monic();
    auto K = std::make_shared<NumberField>();
    K->f = f;
    K->label = label;
    K->n = f.deg();
    SturmChain ch(squarefree_part(f));
    K->r1 = ch.count_real_roots();
    K->r2 = (K->n - K->r1) / 2;
    K->ib = maximal_order_basis(f, K->field_disc, K->eq_index);
    K->ib_inv = qmat_inverse(K->ib);
    return K;
}

NFPtr NumberField::create_with_basis(const QPoly& f_in, const std::string& label,
                                     const QMat& ib) {
    QPoly f = f_in.monic();
    auto K = std::make_shared<NumberField>();
    K->f = f;
    K->label = label;
    K->n = f.deg();
    SturmChain ch(squarefree_part(f));
    K->r1 = ch.count_real_roots();
    K->r2 = (K->n - K->r1) / 2;
    K->ib = ib;
    K->ib_inv = qmat_inverse(ib);
    // sanity: closed under multiplication and contains the power basis
    NFPtr Kc = K;
    int n = K->n;
    for (int i = 0; i < n; i++) {
        QVec ei(n, Q(0));
        ei[i] = 1;
        QVec c = qmat_apply(K->ib_inv, ei);
        for (const Q& v : c)
            if (!is_int(v)) throw std::domain_error("integral basis does not contain Z[x]");
    }
    for (int i = 0; i < n; i++) {
        for (int j = i; j < n; j++) {
            QVec bi(n), bj(n);
            for (int k = 0; k < n; k++) { bi[k] = K->ib[k][i]; bj[k] = K->ib[k][j]; }
            NFElement prod = NFElement(Kc, bi) * NFElement(Kc, bj);
            for (const Q& v : qmat_apply(K->ib_inv, prod.a))
                if (!is_int(v)) throw std::domain_error("integral basis is not a ring");
        }
    }
    // discriminant of the given order
    QMat T(n, QVec(n));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            QVec bi(n), bj(n);
            for (int k = 0; k < n; k++) { bi[k] = K->ib[k][i]; bj[k] = K->ib[k][j]; }
            T[i][j] = (NFElement(Kc, bi) * NFElement(Kc, bj)).trace();
        }
    Q d = qmat_det(T);
    if (!is_int(d)) throw std::domain_error("order discriminant not integral");
    K->field_disc = znum(d);
    Q idx2 = qpoly_discriminant(f) / d;
    Q idx;
    if (!rational_square(idx2, idx) || !is_int(idx))
        throw std::domain_error("basis index check failed");
    K->eq_index = znum(idx);
    return K;
}

NumberField::~NumberField() {
    // the root cache is keyed by address; a later field allocated at the same
    // address must not inherit this field's embeddings
    std::lock_guard<std::mutex> lk(cache_map_mtx);
    cache_map().erase(this);
}

std::vector<CBall> NumberField::embeddings(unsigned prec) const {
    std::lock_guard<std::mutex> lk0(cache_map_mtx);
    FieldCache& fc = cache_map()[this];
    std::lock_guard<std::mutex> lk(fc.mtx);
    if (fc.prec >= prec) return fc.roots;
    fc.roots = compute_roots(f, r1, r2, prec);
    fc.prec = prec;
    return fc.roots;
}

std::vector<int> NumberField::embedding_weights() const {
    std::vector<int> w(r1, 1);
    for (int i = 0; i < r2; i++) w.push_back(2);
    return w;
}

NFElement::NFElement(NFPtr K_, QVec coords) : K(std::move(K_)), a(std::move(coords)) {
    a.resize(K->n, Q(0));
}

NFElement NFElement::zero(NFPtr K) { return NFElement(K, QVec(K->n, Q(0))); }
NFElement NFElement::one(NFPtr K) { return from_q(K, Q(1)); }
NFElement NFElement::from_q(NFPtr K, const Q& v) {
    QVec c(K->n, Q(0));
    c[0] = v;
    return NFElement(K, std::move(c));
}
NFElement NFElement::gen(NFPtr K) {
    QVec c(K->n, Q(0));
    if (K->n > 1) c[1] = 1;
    else c[0] = -K->f.coeff(0);
    return NFElement(K, std::move(c));
}
NFElement NFElement::from_integral(NFPtr K, const QVec& coords) {
    QVec c = coords;
    c.resize(K->n, Q(0));
    return NFElement(K, qmat_apply(K->ib, c));
}

bool NFElement::is_zero() const {
    for (const Q& v : a)
        if (v != 0) return false;
    return true;
}

bool NFElement::is_rational() const {
    for (size_t i = 1; i < a.size(); i++)
        if (a[i] != 0) return false;
    return true;
}

NFElement NFElement::operator+(const NFElement& o) const {
    QVec r(a);
    for (size_t i = 0; i < r.size(); i++) r[i] += o.a[i];
    return NFElement(K, std::move(r));
}
NFElement NFElement::operator-(const NFElement& o) const {
    QVec r(a);
    for (size_t i = 0; i < r.size(); i++) r[i] -= o.a[i];
    return NFElement(K, std::move(r));
}
NFElement NFElement::operator-() const {
    QVec r(a);
    for (Q& v : r) v = -v;
    return NFElement(K, std::move(r));
}
NFElement NFElement::operator*(const NFElement& o) const {
    QPoly p = QPoly(a) * QPoly(o.a);
    QPoly q, r;
    qpoly_divrem(p, K->f, q, r);
    QVec c = r.c;
    return NFElement(K, std::move(c));
}
NFElement NFElement::operator*(const Q& s) const {
    QVec r(a);
    for (Q& v : r) v *= s;
    return NFElement(K, std::move(r));
}

NFElement NFElement::inv() const {
    if (is_zero()) throw std::domain_error("NFElement::inv of zero");
    QPoly g, u, v;
    qpoly_ext_gcd(QPoly(a), K->f, g, u, v);
    if (g.deg() != 0) throw std::domain_error("NFElement::inv: gcd not constant");
    QPoly q, r;
    qpoly_divrem(u * (1 / g.c[0]), K->f, q, r);
    QVec c = r.c;
    return NFElement(K, std::move(c));
}

NFElement NFElement::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    NFElement r = one(K), b = *this;
    unsigned long n = (unsigned long)e;
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

QMat NFElement::mul_matrix() const {
    int n = K->n;
    QMat m(n, QVec(n, Q(0)));
    NFElement cur = *this;
    for (int j = 0; j < n; j++) {
        for (int i = 0; i < n; i++) m[i][j] = cur.a[i];
        if (j + 1 < n) cur = cur * gen(K);
    }
    return m;
}

Q NFElement::norm() const { return qmat_det(mul_matrix()); }

Q NFElement::trace() const {
    QMat m = mul_matrix();
    Q t = 0;
    for (int i = 0; i < K->n; i++) t += m[i][i];
    return t;
}

QPoly NFElement::char_poly() const {
    // Faddeev-LeVerrier
    int n = K->n;
    QMat M = mul_matrix();
    QMat N = qmat_identity(n);
    std::vector<Q> c(n + 1, Q(0));
    c[n] = 1;
    for (int k = 1; k <= n; k++) {
        QMat Mk = qmat_mul(M, N);
        Q tr = 0;
        for (int i = 0; i < n; i++) tr += Mk[i][i];
        c[n - k] = -tr / k;
        N = Mk;
        for (int i = 0; i < n; i++) N[i][i] += c[n - k];
    }
    return QPoly(std::move(c));
}

QPoly NFElement::minpoly() const {
    int n = K->n;
    std::vector<QVec> pows;
    NFElement cur = one(K);
    pows.push_back(cur.a);
    for (int d = 1; d <= n; d++) {
        cur = cur * *this;
        // is cur in the span of pows?
        QMat A(n, QVec(d, Q(0)));
        for (int i = 0; i < n; i++)
            for (int j = 0; j < d; j++) A[i][j] = pows[j][i];
        QVec b(n);
        for (int i = 0; i < n; i++) b[i] = cur.a[i];
        QVec x;
        if (qmat_solve(A, b, x)) {
            // verify (qmat_solve only checks pivot consistency)
            QVec chk = qmat_apply(A, x);
            bool okv = true;
            for (int i = 0; i < n; i++)
                if (chk[i] != b[i]) okv = false;
            if (okv) {
                std::vector<Q> mc(d + 1, Q(0));
                mc[d] = 1;
                for (int j = 0; j < d; j++) mc[j] = -x[j];
                return QPoly(std::move(mc));
            }
        }
        pows.push_back(cur.a);
    }
    throw std::runtime_error("minpoly: no relation found");
}

QVec NFElement::integral_coords() const { return qmat_apply(K->ib_inv, a); }

bool NFElement::is_integral() const {
    for (const Q& v : integral_coords())
        if (!is_int(v)) return false;
    return true;
}

Z NFElement::denominator() const {
    Z d = 1;
    for (const Q& v : integral_coords())
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), zden(v).get_mpz_t());
    return d;
}

std::vector<CBall> NFElement::embed(unsigned prec) const {
    auto roots = K->embeddings(prec);
    std::vector<CBall> out;
    QPoly p{QPoly(a)};
    for (const CBall& z : roots) out.push_back(p.eval(z));
    return out;
}

std::string NFElement::str(const std::string& var) const {
    return QPoly(a).str(var);
}

}  // namespace egr
