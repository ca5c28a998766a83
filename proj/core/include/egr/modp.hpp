#pragma once

#include <cstdint>
#include <vector>

#include "egr/poly.hpp"
#include "egr/util.hpp"

namespace egr {

/// Polynomials over F_p for machine-word primes p < 2^31.
/// Coefficients low to high, always reduced mod p, no trailing zeros.
struct FpPoly {
    uint64_t p = 0;
    std::vector<uint64_t> c;

    FpPoly() = default;
    explicit FpPoly(uint64_t p_) : p(p_) {}
    FpPoly(uint64_t p_, std::vector<uint64_t> coeffs) : p(p_), c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int deg() const { return (int)c.size() - 1; }
    bool is_zero() const { return c.empty(); }
    uint64_t lc() const { return c.back(); }
    bool operator==(const FpPoly& o) const { return p == o.p && c == o.c; }
};

FpPoly fp_from_z(const std::vector<Z>& coeffs, uint64_t p);
FpPoly fp_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_scal(const FpPoly& a, uint64_t s);
void fp_divrem(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
FpPoly fp_rem(const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(FpPoly a, FpPoly b);  // monic
FpPoly fp_monic(const FpPoly& a);
FpPoly fp_derivative(const FpPoly& a);
FpPoly fp_powmod(const FpPoly& base, const Z& e, const FpPoly& mod);
uint64_t fp_eval(const FpPoly& a, uint64_t x);

bool fp_squarefree(const FpPoly& f);

/// Distinct degree factorization of a squarefree monic f: returns pairs
/// (product of all irreducible factors of degree d, d) with d increasing.
std::vector<std::pair<FpPoly, int>> fp_ddf(const FpPoly& f);

/// Degrees (with multiplicity) of the irreducible factors of squarefree f.
std::vector<int> fp_factor_degrees(const FpPoly& f);

/// Full irreducible factorization of monic f (any multiplicities):
/// returns (factor, exponent) pairs.
std::vector<std::pair<FpPoly, int>> fp_factor(const FpPoly& f, uint64_t seed = 1);

bool fp_irreducible(const FpPoly& f);

}  // namespace egr
