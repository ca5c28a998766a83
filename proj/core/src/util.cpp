#include "egr/util.hpp"

#include <numeric>

namespace egr {

std::vector<uint64_t> primes_below(uint64_t bound) {
    std::vector<uint64_t> out;
    if (bound <= 2) return out;
    std::vector<bool> comp(bound, false);
    for (uint64_t i = 2; i < bound; i++) {
        if (comp[i]) continue;
        out.push_back(i);
        for (uint64_t j = i * i; j < bound; j += i) comp[j] = true;
    }
    return out;
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; s++; }
    // deterministic Miller-Rabin bases for 64-bit inputs
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; i++) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

uint64_t next_prime_u64(uint64_t n) {
    uint64_t c = n + 1;
    if (c <= 2) return 2;
    if (c % 2 == 0) c++;
    while (!is_prime_u64(c)) c += 2;
    return c;
}

static Z pollard_rho(const Z& n, unsigned long seed) {
    Z x(seed % 1000 + 2), y = x, c(seed / 1000 + 1), d(1);
    Z diff;
    int steps = 0;
    while (d == 1 && steps < 1 << 20) {
        x = (x * x + c) % n;
        y = (y * y + c) % n;
        y = (y * y + c) % n;
        diff = x - y;
        if (diff < 0) diff = -diff;
        if (diff == 0) break;
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        steps++;
    }
    return (d > 1 && d < n) ? d : Z(0);
}

std::vector<std::pair<Z, int>> factor_integer(const Z& n_in, Z& unfactored,
                                              uint64_t trial_bound, int rho_rounds) {
    std::vector<std::pair<Z, int>> out;
    unfactored = 1;
    Z n = abs(n_in);
    if (n <= 1) return out;
    for (uint64_t p : primes_below(trial_bound)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; e++; }
            out.push_back({Z((unsigned long)p), e});
        }
        if (n == 1) break;
        Z psq = Z((unsigned long)p) * Z((unsigned long)p);
        if (psq > n) break;
    }
    std::vector<Z> stack;
    if (n > 1) stack.push_back(n);
    auto note_prime = [&](const Z& p) {
        for (auto& [q, e] : out) {
            if (q == p) { e++; return; }
        }
        out.push_back({p, 1});
    };
    int budget = rho_rounds;
    while (!stack.empty()) {
        Z m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (mpz_probab_prime_p(m.get_mpz_t(), 40)) { note_prime(m); continue; }
        Z r;
        if (perfect_square(m, r)) { stack.push_back(r); stack.push_back(r); continue; }
        Z d(0);
        for (int i = 0; i < 8 && d == 0 && budget > 0; i++, budget--)
            d = pollard_rho(m, 2 + 37 * (unsigned long)i + (unsigned long)budget);
        if (d == 0) { unfactored *= m; continue; }
        stack.push_back(d);
        stack.push_back(m / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace egr
