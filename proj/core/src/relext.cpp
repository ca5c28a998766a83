#include "egr/relext.hpp"

#include <stdexcept>

#include "egr/zfactor.hpp"

namespace egr {

NFElement quad_conj(const NFElement& x) {
    NFPtr F = x.K;
    if (F->n != 2) throw std::domain_error("quad_conj: field not quadratic");
    // conj(t) = -p - t for f = x^2 + p x + q
    Q p = F->f.coeff(1);
    return NFElement(F, {x.a[0] - x.a[1] * p, -x.a[1]});
}

std::vector<NFElement> conj_coeffs(const std::vector<NFElement>& poly) {
    std::vector<NFElement> out;
    out.reserve(poly.size());
    for (const NFElement& c : poly) out.push_back(quad_conj(c));
    return out;
}

RelativeExtension build_relative(NFPtr F, const std::vector<NFElement>& g,
                                 const std::string& label) {
    if (F->n != 2) throw std::domain_error("build_relative: base not quadratic");
    int d = (int)g.size() - 1;
    if (d < 1 || !(g.back() == NFElement::one(F)))
        throw std::domain_error("build_relative: need a monic polynomial");
    // split g = A(x) + B(x) y over the power basis of F
    std::vector<Q> ac(d + 1, Q(0)), bc(d + 1, Q(0));
    for (int i = 0; i <= d; i++) {
        ac[i] = g[i].a[0];
        bc[i] = g[i].a[1];
    }
    QPoly A(ac), B(bc);
    if (B.is_zero())
        throw std::domain_error("build_relative: generator does not involve the base field");
    Q p = F->f.coeff(1), q = F->f.coeff(0);
    // Res_y(y^2 + p y + q, A + B y) = A^2 - p A B + q B^2
    QPoly fabs = A * A - A * B * p + B * B * q;
    if (!qpoly_irreducible(fabs))
        throw std::domain_error("build_relative: polynomial reducible over the base field");
    RelativeExtension ext;
    ext.F = F;
    ext.K = NumberField::create(fabs, label);
    ext.rel_degree = d;
    NFElement c = NFElement::gen(ext.K);
    NFElement Ac = NFElement::zero(ext.K), Bc = NFElement::zero(ext.K);
    for (int i = A.deg(); i >= 0; i--) Ac = Ac * c + NFElement::from_q(ext.K, A.coeff(i));
    for (int i = B.deg(); i >= 0; i--) Bc = Bc * c + NFElement::from_q(ext.K, B.coeff(i));
    ext.w_img = -(Ac / Bc);
    NFElement chk = ext.w_img * ext.w_img + ext.w_img * p + NFElement::from_q(ext.K, q);
    if (!chk.is_zero()) throw std::logic_error("build_relative: embedding check failed");
    return ext;
}

NFElement eval_relative(const std::vector<NFElement>& poly, const NFElement& x,
                        const RelativeExtension& ext) {
    NFElement r = NFElement::zero(ext.K);
    for (int i = (int)poly.size() - 1; i >= 0; i--) {
        NFElement ci = NFElement::from_q(ext.K, poly[i].a[0]) + ext.w_img * poly[i].a[1];
        r = r * x + ci;
    }
    return r;
}

std::vector<NFElement> minpoly_relative(const NFElement& alpha,
                                        const RelativeExtension& ext) {
    if (alpha.K != ext.K) throw std::domain_error("minpoly_relative: wrong field");
    int n = ext.K->n, m = ext.F->n;
    std::vector<int> divs;
    for (int d = 1; d <= ext.rel_degree; d++)
        if (ext.rel_degree % d == 0) divs.push_back(d);
    // powers of alpha and of the embedded base generator
    std::vector<NFElement> apow{NFElement::one(ext.K)};
    for (int i = 1; i <= ext.rel_degree; i++) apow.push_back(apow.back() * alpha);
    std::vector<NFElement> wpow{NFElement::one(ext.K)};
    for (int j = 1; j < m; j++) wpow.push_back(wpow.back() * ext.w_img);
    for (int d : divs) {
        QMat M(n, QVec(d * m, Q(0)));
        for (int i = 0; i < d; i++)
            for (int j = 0; j < m; j++) {
                NFElement col = apow[i] * wpow[j];
                for (int r = 0; r < n; r++) M[r][i * m + j] = col.a[r];
            }
        QVec rhs(n);
        for (int r = 0; r < n; r++) rhs[r] = -apow[d].a[r];
        QVec x;
        if (!qmat_solve(M, rhs, x)) continue;
        std::vector<NFElement> out;
        for (int i = 0; i < d; i++) {
            QVec fc(m, Q(0));
            for (int j = 0; j < m; j++) fc[j] = x[i * m + j];
            out.push_back(NFElement(ext.F, fc));
        }
        out.push_back(NFElement::one(ext.F));
        // the solver gives some annihilating polynomial; with d minimal it is
        // the minimal one, but verify evaluation anyway
        if (!eval_relative(out, alpha, ext).is_zero())
            throw std::logic_error("minpoly_relative: verification failed");
        return out;
    }
    throw std::logic_error("minpoly_relative: no annihilating polynomial found");
}

}  // namespace egr
