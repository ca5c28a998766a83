#pragma once

#include <memory>
#include <string>
#include <vector>

#include "egr/linalg.hpp"
#include "egr/poly.hpp"

namespace egr {

struct NumberField;
using NFPtr = std::shared_ptr<const NumberField>;

/// Number field Q[x]/(f) for monic irreducible f, with a fixed integral
/// basis of the maximal order expressed over the power basis.
struct NumberField {
    QPoly f;
    std::string label;
    int n = 0;
    int r1 = 0, r2 = 0;

    QMat ib;      // column j = power basis coordinates of the j-th basis element
    QMat ib_inv;  // power coordinates -> integral coordinates
    Z field_disc = 0;
    Z eq_index = 1;  // index of Z[x] in the maximal order

    ~NumberField();

    /// Computes the maximal order (round-2).
    static NFPtr create(const QPoly& f, const std::string& label);
    /// Trusts the supplied basis after verifying it is a ring containing Z[x].
    static NFPtr create_with_basis(const QPoly& f, const std::string& label,
                                   const QMat& ib);

    int degree() const { return n; }
    bool is_totally_real() const { return r2 == 0; }
    int unit_rank() const { return r1 + r2 - 1; }

    /// Archimedean embeddings of the root of f: r1 real embeddings in
    /// increasing order, then r2 complex ones (positive imaginary part),
    /// certified to the requested precision in bits.
    std::vector<CBall> embeddings(unsigned prec) const;

    /// Multiplicities n_v per embedding: 1 for real, 2 for complex.
    std::vector<int> embedding_weights() const;
};

struct NFElement {
    NFPtr K;
    QVec a;  // power basis coordinates, length n

    NFElement() = default;
    NFElement(NFPtr K_, QVec coords);
    static NFElement zero(NFPtr K);
    static NFElement one(NFPtr K);
    static NFElement from_q(NFPtr K, const Q& v);
    static NFElement gen(NFPtr K);  // the root of f
    static NFElement from_integral(NFPtr K, const QVec& coords);

    bool is_zero() const;
    bool is_rational() const;
    bool operator==(const NFElement& o) const { return a == o.a; }

    NFElement operator+(const NFElement& o) const;
    NFElement operator-(const NFElement& o) const;
    NFElement operator-() const;
    NFElement operator*(const NFElement& o) const;
    NFElement operator*(const Q& s) const;
    NFElement inv() const;
    NFElement operator/(const NFElement& o) const { return *this * o.inv(); }
    NFElement pow(long e) const;

    Q norm() const;
    Q trace() const;
    QPoly minpoly() const;         // monic, over Q
    QPoly char_poly() const;       // degree n
    QMat mul_matrix() const;       // multiplication in the power basis

    QVec integral_coords() const;  // coordinates over the integral basis
    bool is_integral() const;
    /// Smallest d >= 1 with d * this in the maximal order.
    Z denominator() const;

    /// Values at the archimedean embeddings, same order as the field's.
    std::vector<CBall> embed(unsigned prec) const;

    std::string str(const std::string& var = "t") const;
};

}  // namespace egr
