#pragma once

#include <vector>

#include "egr/numfield.hpp"
#include "egr/zmat.hpp"

namespace egr {

/// Fractional ideal (1/den) * L where L is a full lattice inside the maximal
/// order, stored as a lower-triangular column HNF over the integral basis.
struct Ideal {
    NFPtr K;
    ZMat h;
    Z den = 1;

    Z lattice_norm() const;      // det of h
    Q norm() const;              // det(h) / den^n
    bool is_integral() const;
    bool contains(const NFElement& x) const;
    bool is_whole_ring() const;
    void normalize();            // cancel common content of h and den

    /// The basis element for column j as a field element.
    NFElement basis_element(int j) const;
};

Ideal ideal_whole(NFPtr K);
Ideal ideal_principal(const NFElement& x);
Ideal ideal_from_gens(NFPtr K, const std::vector<NFElement>& gens);
Ideal ideal_add(const Ideal& a, const Ideal& b);
Ideal ideal_mul(const Ideal& a, const Ideal& b);
Ideal ideal_mul(const Ideal& a, const NFElement& x);
Ideal ideal_inverse(const Ideal& a);
bool ideal_eq(const Ideal& a, const Ideal& b);
bool ideals_coprime(const Ideal& a, const Ideal& b);

struct PrimeIdeal {
    Ideal p;
    Z over;            // rational prime
    int e = 1, f = 1;  // ramification index, residue degree
    NFElement second_gen;
};

/// Primes above p.  Handles primes dividing the index of the equation order
/// by switching to a generator whose own index is prime to p.
std::vector<PrimeIdeal> prime_decomposition(NFPtr K, const Z& p);

/// All integral ideals of norm at most B together with their norms,
/// sorted by norm.
std::vector<std::pair<Ideal, Z>> ideals_of_norm_up_to(NFPtr K, const Q& B);

/// For x != 0, the coprime integral ideals with (x) = num * den^-1.
void numerator_denominator(const NFElement& x, Ideal& num, Ideal& den);

}  // namespace egr
