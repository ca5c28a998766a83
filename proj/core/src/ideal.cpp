#include "egr/ideal.hpp"

#include <functional>
#include <stdexcept>

#include "egr/modp.hpp"

namespace egr {

namespace {

// columns: integral coordinates of x * b_j over the integral basis
QMat mult_matrix_integral(const NFElement& x) {
    NFPtr K = x.K;
    int n = K->n;
    QMat m(n, QVec(n));
    for (int j = 0; j < n; j++) {
        QVec bj(n, Q(0));
        bj[j] = 1;
        NFElement prod = x * NFElement::from_integral(K, bj);
        QVec c = prod.integral_coords();
        for (int i = 0; i < n; i++) m[i][j] = c[i];
    }
    return m;
}

Ideal from_columns(NFPtr K, const QMat& cols, const Z& extra_den) {
    int n = K->n;
    Z d = extra_den;
    for (const auto& row : cols)
        for (const Q& v : row) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), zden(v).get_mpz_t());
    ZMat zc(n, ZVec(cols[0].size()));
    for (int i = 0; i < n; i++)
        for (size_t j = 0; j < cols[i].size(); j++) {
            Q v = cols[i][j] * Q(d) / Q(extra_den);
            if (!is_int(v)) throw std::logic_error("ideal columns: denominator bookkeeping");
            zc[i][j] = znum(v);
        }
    Ideal I;
    I.K = K;
    I.h = hnf_lower(zc);
    I.den = d;
    I.normalize();
    return I;
}

}  // namespace

Z Ideal::lattice_norm() const {
    Z d = 1;
    for (size_t i = 0; i < h.size(); i++) d *= h[i][i];
    return d;
}

Q Ideal::norm() const { return Q(lattice_norm()) / qpow(Q(den), K->n); }

bool Ideal::is_integral() const { return den == 1; }

bool Ideal::contains(const NFElement& x) const {
    QVec c = x.integral_coords();
    ZVec v(c.size());
    for (size_t i = 0; i < c.size(); i++) {
        Q s = c[i] * Q(den);
        if (!is_int(s)) return false;
        v[i] = znum(s);
    }
    return hnf_contains(h, v);
}

bool Ideal::is_whole_ring() const {
    if (den != 1) {
        Ideal c = *this;
        c.normalize();
        return c.is_whole_ring();
    }
    for (size_t i = 0; i < h.size(); i++)
        for (size_t j = 0; j < h.size(); j++)
            if (h[i][j] != (i == j ? 1 : 0)) return false;
    return true;
}

void Ideal::normalize() {
    Z g = den;
    for (const auto& row : h)
        for (const Z& v : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1) {
        den /= g;
        for (auto& row : h)
            for (Z& v : row) v /= g;
    }
}

NFElement Ideal::basis_element(int j) const {
    int n = K->n;
    QVec c(n);
    for (int i = 0; i < n; i++) c[i] = Q(h[i][j]) / Q(den);
    return NFElement::from_integral(K, c);
}

Ideal ideal_whole(NFPtr K) {
    Ideal I;
    I.K = K;
    I.h = zmat_identity(K->n);
    return I;
}

Ideal ideal_principal(const NFElement& x) {
    if (x.is_zero()) throw std::domain_error("ideal_principal of zero");
    return from_columns(x.K, mult_matrix_integral(x), Z(1));
}

Ideal ideal_from_gens(NFPtr K, const std::vector<NFElement>& gens) {
    int n = K->n;
    QMat cols(n);
    for (const NFElement& g : gens) {
        if (g.is_zero()) continue;
        QMat m = mult_matrix_integral(g);
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) cols[i].push_back(m[i][j]);
    }
    if (cols[0].empty()) throw std::domain_error("ideal_from_gens: all generators zero");
    return from_columns(K, cols, Z(1));
}

Ideal ideal_add(const Ideal& a, const Ideal& b) {
    int n = a.K->n;
    QMat cols(n);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < n; j++) cols[i].push_back(Q(a.h[i][j]) / Q(a.den));
        for (int j = 0; j < n; j++) cols[i].push_back(Q(b.h[i][j]) / Q(b.den));
    }
    return from_columns(a.K, cols, Z(1));
}

Ideal ideal_mul(const Ideal& a, const Ideal& b) {
    int n = a.K->n;
    QMat cols(n);
    for (int j = 0; j < n; j++) {
        NFElement ej = a.basis_element(j);
        for (int k = 0; k < n; k++) {
            NFElement prod = ej * b.basis_element(k);
            QVec c = prod.integral_coords();
            for (int i = 0; i < n; i++) cols[i].push_back(c[i]);
        }
    }
    return from_columns(a.K, cols, Z(1));
}

Ideal ideal_mul(const Ideal& a, const NFElement& x) {
    int n = a.K->n;
    QMat cols(n);
    for (int j = 0; j < n; j++) {
        QVec c = (a.basis_element(j) * x).integral_coords();
        for (int i = 0; i < n; i++) cols[i].push_back(c[i]);
    }
    return from_columns(a.K, cols, Z(1));
}

Ideal ideal_inverse(const Ideal& a) {
    int n = a.K->n;
    // inverse of the integral lattice part, then rescale by den
    Z N = a.lattice_norm();
    ZMat A(n * n, ZVec(n));
    for (int j = 0; j < n; j++) {
        NFElement bj = a.basis_element(j) * Q(a.den);  // integral lattice element
        QMat m = mult_matrix_integral(bj);
        for (int r = 0; r < n; r++)
            for (int c = 0; c < n; c++) {
                if (!is_int(m[r][c])) throw std::logic_error("ideal_inverse: non integral");
                A[j * n + r][c] = znum(m[r][c]);
            }
    }
    ZMat L = solve_mod_lattice(A, N);
    Ideal inv;
    inv.K = a.K;
    inv.h = L;
    for (auto& row : inv.h)
        for (Z& v : row) v *= a.den;
    inv.den = N;
    inv.normalize();
    inv.h = hnf_lower(inv.h);
    return inv;
}

bool ideal_eq(const Ideal& a, const Ideal& b) {
    Ideal x = a, y = b;
    x.normalize();
    y.normalize();
    return x.den == y.den && x.h == y.h;
}

bool ideals_coprime(const Ideal& a, const Ideal& b) {
    return ideal_add(a, b).is_whole_ring();
}

std::vector<PrimeIdeal> prime_decomposition(NFPtr K, const Z& p) {
    if (!p.fits_ulong_p()) throw std::domain_error("prime_decomposition: prime too large");
    uint64_t pu = p.get_ui();
    int n = K->n;
    NFElement beta = NFElement::gen(K);
    QPoly mp = K->f;
    if (K->eq_index % p == 0) {
        // look for a generator whose index is prime to p
        bool found = false;
        uint64_t seed = 12345;
        for (int tries = 0; tries < 200 && !found; tries++) {
            QVec c(n);
            for (int i = 0; i < n; i++) {
                seed = seed * 6364136223846793005ull + 1442695040888963407ull;
                c[i] = Q((long)((seed >> 17) % (2 * tries / 10 + 5)) - (long)(tries / 10 + 2));
            }
            NFElement cand = NFElement::from_integral(K, c);
            QPoly m = cand.minpoly();
            if (m.deg() != n) continue;
            Q d = qpoly_discriminant(m);
            if (d == 0) continue;
            Q idx2 = d / Q(K->field_disc);
            if (!is_int(idx2)) continue;
            if (znum(idx2) % p != 0) {
                beta = cand;
                mp = m;
                found = true;
            }
        }
        if (!found)
            throw std::runtime_error("prime_decomposition: no p-integral generator found");
    }
    Z dummy;
    std::vector<Z> zc = qpoly_primitive_z(mp, dummy);
    FpPoly fpP = fp_from_z(zc, pu);
    auto fac = fp_factor(fpP);
    std::vector<PrimeIdeal> out;
    int sum_ef = 0;
    for (auto& [g, e] : fac) {
        PrimeIdeal P;
        P.over = p;
        P.e = e;
        P.f = g.deg();
        // g evaluated at beta with symmetric lifts of the coefficients
        QPoly gz;
        {
            std::vector<Q> cc(g.c.size());
            for (size_t i = 0; i < g.c.size(); i++) {
                Z v((unsigned long)g.c[i]);
                if (2 * v > p) v -= p;
                cc[i] = Q(v);
            }
            gz = QPoly(std::move(cc));
        }
        NFElement gb = NFElement::zero(K);
        NFElement pw = NFElement::one(K);
        for (int i = 0; i <= gz.deg(); i++) {
            gb = gb + pw * gz.coeff(i);
            pw = pw * beta;
        }
        P.second_gen = gb;
        P.p = ideal_from_gens(K, {NFElement::from_q(K, Q(p)), gb});
        if (P.p.lattice_norm() != zpow(p, P.f))
            throw std::runtime_error("prime_decomposition: norm check failed");
        sum_ef += P.e * P.f;
        out.push_back(std::move(P));
    }
    if (sum_ef != n) throw std::runtime_error("prime_decomposition: sum e*f mismatch");
    return out;
}

std::vector<std::pair<Ideal, Z>> ideals_of_norm_up_to(NFPtr K, const Q& B) {
    std::vector<std::pair<Ideal, Z>> out;
    Z Bz;
    mpz_fdiv_q(Bz.get_mpz_t(), znum(B).get_mpz_t(), zden(B).get_mpz_t());
    if (Bz < 1) return out;
    std::vector<std::pair<Ideal, Z>> primes;  // (prime, norm)
    for (uint64_t p = 2; Z((unsigned long)p) <= Bz; p = next_prime_u64(p)) {
        for (auto& P : prime_decomposition(K, Z((unsigned long)p))) {
            Z nrm = zpow(P.over, P.f);
            if (nrm <= Bz) primes.push_back({P.p, nrm});
        }
    }
    // depth first products
    std::function<void(size_t, const Ideal&, const Z&)> rec =
        [&](size_t i, const Ideal& cur, const Z& nrm) {
            if (i == primes.size()) {
                out.push_back({cur, nrm});
                return;
            }
            rec(i + 1, cur, nrm);
            Ideal c = cur;
            Z m = nrm;
            while (true) {
                m *= primes[i].second;
                if (m > Bz) break;
                c = ideal_mul(c, primes[i].first);
                rec(i + 1, c, m);
            }
        };
    rec(0, ideal_whole(K), Z(1));
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    return out;
}

void numerator_denominator(const NFElement& x, Ideal& num, Ideal& den) {
    if (x.is_zero()) throw std::domain_error("numerator_denominator of zero");
    NFPtr K = x.K;
    int n = K->n;
    QMat M = mult_matrix_integral(x);
    Z d = 1;
    for (auto& row : M)
        for (const Q& v : row) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), zden(v).get_mpz_t());
    ZMat A(n, ZVec(n));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) A[i][j] = znum(M[i][j] * Q(d));
    den.K = K;
    den.h = solve_mod_lattice(A, d);
    den.den = 1;
    // numerator = x * den
    QMat cols(n);
    for (int j = 0; j < n; j++) {
        QVec bc(n);
        for (int i = 0; i < n; i++) bc[i] = Q(den.h[i][j]);
        NFElement bj = NFElement::from_integral(K, bc);
        QVec c = (x * bj).integral_coords();
        for (int i = 0; i < n; i++) cols[i].push_back(c[i]);
    }
    num = from_columns(K, cols, Z(1));
    if (abs(x.norm()) * Q(den.lattice_norm()) != Q(num.lattice_norm()))
        throw std::runtime_error("numerator_denominator: norm identity failed");
}

}  // namespace egr
