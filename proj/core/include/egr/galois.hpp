#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "egr/poly.hpp"
#include "egr/util.hpp"

namespace egr {

/// GF(p^k) for tiny q, elements encoded as base-p digit strings of the
/// polynomial basis (so GF(4) has 0, 1, 2 = a, 3 = a+1 with a^2 = a+1).
struct SmallField {
    int p = 0, k = 1, q = 0;
    std::vector<int> defpoly;  // monic defining polynomial mod p, low to high

    static SmallField make(int p, int k);

    int add(int x, int y) const;
    int neg(int x) const;
    int sub(int x, int y) const { return add(x, neg(y)); }
    int mul(int x, int y) const;
    int inv(int x) const;
    int from_int(long n) const;  // image of an integer (prime subfield)
    std::string str(int x) const;
};

/// Order of the ratio of the two roots of x^2 - a x + q in the projective
/// line picture; the roots may generate the quadratic extension.  Requires
/// q invertible; returns -1 when qbar = 0 (order undefined there).
int projective_frobenius_order(const SmallField& F, int abar, int qbar);

/// x + y*e with e^2 = e + 1 reduced mod 2 into GF(4); e maps to the element
/// with code 3 (the tables' alpha^2).
int reduce_golden_mod2(const Z& x, const Z& y);
/// x + y*e reduced mod sqrt(5) = 2e - 1 into GF(5); e maps to 3.
int reduce_golden_mod_sqrt5(const Z& x, const Z& y);
/// x + y*sqrt(2) reduced mod sqrt(2) into GF(2).
int reduce_sqrt2_mod_sqrt2(const Z& x, const Z& y);

/// delta_F * p^(1 + 1/(p-1)).
double fontaine_bound(unsigned p, double delta_F);

struct RamificationSupport {
    std::vector<Z> primes;  // increasing
    bool complete = true;   // false when a composite cofactor resisted factoring
};

RamificationSupport ramification_support(const Z& disc);

/// Factorization shapes of f mod p over primes p <= bound, skipping primes
/// where the reduction degenerates (p | lc or denominator, or f mod p not
/// squarefree).  Partitions are factor degrees sorted increasingly.
struct CycleTypeScan {
    std::map<std::vector<int>, uint64_t> counts;
    uint64_t primes_used = 0;
    uint64_t primes_skipped = 0;
};

CycleTypeScan cycle_type_scan(const QPoly& f, uint64_t prime_bound, int threads = 1);

using Perm = std::vector<int>;

Perm perm_mul(const Perm& a, const Perm& b);  // (a*b)(i) = a(b(i))
std::vector<int> perm_cycle_type(const Perm& a);

/// Closure of a generating set under multiplication.
std::vector<Perm> perm_group_closure(const std::vector<Perm>& gens);

struct GroupCandidate {
    std::string name;
    uint64_t order = 0;
    /// One cycle shape census (over all group elements) per considered
    /// faithful transitive action of the right degree.  The same abstract
    /// group can act on the roots in inequivalent ways, so a scan is matched
    /// against every action.
    std::vector<std::map<std::vector<int>, uint64_t>> actions;
};

/// Reference transitive groups compared against a scan: three candidates in
/// degree 6 and three in degree 12.
std::vector<GroupCandidate> candidate_groups(int degree);

struct GroupComparison {
    std::string name;
    bool eliminated = false;        // no considered action produces all observed shapes
    double chi_square = 0.0;        // best distance over the fitting actions
    std::vector<int> witness;       // a shape impossible in every action, when one exists
};

std::vector<GroupComparison> compare_group_candidates(const CycleTypeScan& scan,
                                                      int degree);

/// SL2 over F_2[eps]/(eps^2), built by closure from
/// [[1+eps, eps], [1, 1]] and [[0, 1], [1, 0]].
struct SL2Report {
    uint64_t order = 0;
    uint64_t kernel_order = 0;      // kernel of eps -> 0
    bool kernel_elem_abelian = false;
    bool perm_isomorphic = false;   // generator map to the degree 6 candidate
    bool ok = false;
};

SL2Report build_and_verify_sl2_f2eps();

}  // namespace egr
