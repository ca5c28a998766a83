#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace egr {

using Z = mpz_class;
using Q = mpq_class;

inline Z znum(const Q& q) { return Z(q.get_num()); }
inline Z zden(const Q& q) { return Z(q.get_den()); }

inline bool is_int(const Q& q) { return q.get_den() == 1; }

inline Z zpow(const Z& b, unsigned long e) {
    Z r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Q qpow(const Q& b, long e) {
    if (e < 0) {
        if (b == 0) throw std::domain_error("qpow: 0^negative");
        return 1 / qpow(b, -e);
    }
    Q r = 1, x = b;
    long n = e;
    while (n) {
        if (n & 1) r *= x;
        x *= x;
        n >>= 1;
    }
    return r;
}

/// Exact integer square root test: returns true and sets r if n = r^2.
inline bool perfect_square(const Z& n, Z& r) {
    if (n < 0) return false;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r * r == n;
}

inline bool rational_square(const Q& q, Q& r) {
    if (q < 0) return false;
    Z a, b;
    if (!perfect_square(znum(q), a) || !perfect_square(zden(q), b)) return false;
    r = Q(a) / Q(b);
    return true;
}

/// Primes below a bound, by sieve.
std::vector<uint64_t> primes_below(uint64_t bound);

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((__uint128_t)a * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m);
bool is_prime_u64(uint64_t n);
uint64_t next_prime_u64(uint64_t n);

/// Factor |n| by trial division up to `trial_bound`, then Pollard rho with an
/// effort cap.  Returns (prime, exponent) pairs; if the remaining cofactor
/// could not be factored it is returned via `unfactored` (1 when complete).
std::vector<std::pair<Z, int>> factor_integer(const Z& n, Z& unfactored,
                                              uint64_t trial_bound = 1000000,
                                              int rho_rounds = 64);

}  // namespace egr
