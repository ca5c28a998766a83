#pragma once

#include <optional>
#include <vector>

#include "egr/numfield.hpp"

namespace egr {

/// Dense polynomial with coefficients in a number field, low to high.
using FPoly = std::vector<NFElement>;

FPoly fpoly_trim(FPoly f);
int fpoly_deg(const FPoly& f);
FPoly fpoly_add(const FPoly& a, const FPoly& b);
FPoly fpoly_mul(const FPoly& a, const FPoly& b);
FPoly fpoly_scal(const FPoly& a, const NFElement& s);
FPoly fpoly_derivative(const FPoly& a);
NFElement fpoly_eval(const FPoly& a, const NFElement& x);
NFElement fpoly_resultant(FPoly a, FPoly b);
/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f).
NFElement fpoly_discriminant(const FPoly& f);

/// Genus 2 model y^2 + Q(x) y = P(x) over a number field.
struct GenusTwoModel {
    NFPtr F;
    FPoly P, Q;
};

/// f = Q^2 + 4P; degree must come out 5 or 6 and f squarefree, otherwise the
/// model is singular and an error is thrown.
FPoly complete_square_sextic(const GenusTwoModel& m);

/// Discriminant of the model: 2^-12 disc6(Q^2 + 4P), with the degree 6
/// convention.  A degree 5 sextic is treated as a binary sextic with a root
/// at infinity: disc6 = lc5^2 disc5.
NFElement curve_discriminant(const GenusTwoModel& m);

struct IgusaClebsch {
    NFElement I2, I4, I6, I10;
};

/// Classical Igusa-Clebsch invariants of a binary sextic (degree 5 handled by
/// the same root-at-infinity convention); I10 equals disc6(f) here.
IgusaClebsch igusa_clebsch(const FPoly& f);

struct EllipticModel {
    NFPtr F;
    NFElement a1, a2, a3, a4, a6;
};

NFElement elliptic_discriminant(const EllipticModel& e);

/// N_{Kf/Q}(Np + 1 - a) for an eigenvalue a in the coefficient field.
Z point_count_from_eigenvalue(const Z& Np, const NFElement& a);

/// True when some count is odd (no rational 2-torsion); nullopt for an empty
/// list (indeterminate).
std::optional<bool> two_torsion_obstruction(const std::vector<Z>& counts);

/// Square test in Q or a real quadratic field.
bool is_square_in_field(const NFElement& x, NFElement* root = nullptr);

/// z = 2(6250h^2 - 4500g^2 h - 1350gh - 108h - 972g^5 - 324g^4 - 27g^3)
/// and whether z is a square in the base field.
std::pair<NFElement, bool> humbert5_evaluate(const NFElement& g, const NFElement& h);

/// (g, h) = (eps^m g' / (6 u^2), eps^n h' / u^5).
std::pair<NFElement, NFElement> scaling_parametrization(
    int m, int n, const NFElement& gp, const NFElement& hp, const NFElement& u,
    const NFElement& eps);

/// Root discriminant 2 sqrt(1997) 2^{s / 2^{r+1}} of the 2-torsion tower step,
/// and whether it stays below 4 sqrt(1997) (decided exactly: s < 2^{r+1}).
std::pair<double, bool> rootdisc_tower_1997(int r, int s);

}  // namespace egr
