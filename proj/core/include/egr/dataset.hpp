#pragma once

#include <string>
#include <vector>

#include "egr/g2.hpp"
#include "egr/relext.hpp"
#include "egr/units.hpp"

namespace egr {

// ---------------------------------------------------------------------------
// Embedded reference data for the abelian surface verification suite.
// ---------------------------------------------------------------------------

/// (D, D') with D the field discriminant of the surface and D' the
/// discriminant of the extra real multiplication; power = 2 marks the
/// entries listed with a squared D'.
struct SurfacePair {
    long D = 0;
    long Dprime = 0;
    int power = 1;
};

std::vector<SurfacePair> surface_pairs();          // 41 pairs
std::vector<long> surface_discriminants();         // the 31 distinct D, increasing
std::vector<long> exceptional_discriminants();     // D carrying a squared D'

/// One row of a Frobenius eigenvalue table: prime of F of norm `norm`,
/// generated by pa + pb w, eigenvalue ax + ay e where e is the golden ratio
/// (or sqrt 2 for D = 1997).  Expected residues and projective orders follow;
/// -1 encodes a dash / absent column.
struct FrobeniusRow {
    long norm = 0;
    Z pa, pb;
    Z ax, ay;
    int amod2 = -1;
    int o2 = -1;
    int amod5 = -1;
    int o5 = -1;
};

struct FrobeniusTable {
    long D = 0;
    bool coeff_sqrt2 = false;  // eigenvalues in Z[sqrt 2] instead of Z[golden]
    std::vector<FrobeniusRow> rows;
};

std::vector<FrobeniusTable> frobenius_tables();  // D = 353, 421, 1597, 1997

/// Polynomials whose factorization statistics are scanned, with the
/// candidate group each one is expected to match.
struct ScanPoly {
    std::string name;
    std::vector<Z> coeffs;  // low to high
    int degree = 0;
    std::string group;
};

std::vector<ScanPoly> scan_polynomials();  // 17 entries: one sextic, 16 of degree 12

// ---------------------------------------------------------------------------
// Standard fields and frozen models
// ---------------------------------------------------------------------------

NFPtr field_Q();
NFPtr field_gauss();                    // Q(i)
NFPtr field_sqrt(long n);               // Q(sqrt n), n squarefree, 2 or 3 mod 4
NFPtr field_real_quadratic(long D);     // D = 1 mod 4: w = (1 + sqrt D)/2

/// 2-torsion field of the D = 353 surface: K = F(c), c^3 - c^2 = w - 10.
RelativeExtension twotorsion_field_353();

/// Verified full-rank unit system for the field above (integral coordinates),
/// found by short-vector search; not certified fundamental.
std::vector<QVec> sextic353_unit_coords();

std::vector<long> curve_model_discs();  // {353, 421, 1597}
GenusTwoModel curve_model(long D);

/// Frozen factorization of disc(C_D)/2^12 as unit data: the expected value
/// as an element of F_D.
NFElement curve_disc_expected(long D);

NFElement alpha_353(const RelativeExtension& ext);        // H = 64 generator
NFElement alpha_prime_353(const RelativeExtension& ext);  // its partner

/// Degree 6 product h_alpha * h_alpha' over F_353, low to high.
std::vector<NFElement> hprime_353(NFPtr F);

/// Relative cubic c^3 - c^2 - (w - 10) over F_353, and the degree 6 relative
/// model over F_421.
std::vector<NFElement> g353(NFPtr F);
std::vector<NFElement> g421(NFPtr F);

/// Rational degree 12 model of the 421 2-torsion field.
std::vector<Z> h421_rational();

std::pair<NFElement, NFElement> humbert_point(long D);  // (g, h); D = 353, 421, 1597

struct ScalingData {
    int m = 0, n = 0;
    NFElement gp, hp, u, eps;
};

/// The D = 1597 scaling identity inputs; the stored u carries the sign that
/// makes both components match the Humbert point.
ScalingData scaling_data_1597();

std::vector<EllipticModel> elliptic_models_1997();

/// Quadratic twist data for point count checks: (D, prime norm, generator,
/// eigenvalue, expected count).
struct PointCountCheck {
    long D = 0;
    long norm = 0;
    Z pa, pb;
    Z ax, ay;
    Z expected;
};

std::vector<PointCountCheck> point_count_checks();

// ---------------------------------------------------------------------------
// JSON I/O
// ---------------------------------------------------------------------------

/// {"poly": [c0..cn], "integral_basis": [[..]..] optional, "label": "..."}
NFPtr field_from_json(const std::string& text);
std::string field_to_json(NFPtr K);

/// {"field_label": "...", "units": [[integral coords]..], "certified": bool}
UnitGroup units_from_json(NFPtr K, const std::string& text);
std::string units_to_json(const UnitGroup& U);

std::string elements_to_json(const std::vector<NFElement>& v);

}  // namespace egr
