#pragma once

#include <optional>
#include <vector>

#include "gitnef/git_complex.hpp"
#include "gitnef/intersection.hpp"
#include "gitnef/linalg.hpp"
#include "gitnef/moduli.hpp"

namespace gitnef {

/* The floor(n/2)-1 special-weight bundles V(1/t) paired against the matching
 * basis curves. Odd n = 2f+1 uses t = f+1 .. 2f-1, even n = 2f uses
 * t = f .. 2f-2. */
struct DecompositionBasis {
    int n = 0;
    std::vector<int> t_values;
    std::vector<CurveClass> curves;
};

DecompositionBasis decomposition_basis(int n);

/* Pairing matrix u[i][j] = V(1/t_i) . C_j, upper triangular with positive
 * diagonal, so the bundles are independent and every symmetric divisor has a
 * unique expansion. */
struct TriangularSystem {
    DecompositionBasis basis;
    QMatrix u;
};

/// Computes the pairing matrix and cross-checks every entry against its
/// closed form; a mismatch throws std::logic_error.
TriangularSystem build_system(int n);

struct AlphaDecomposition {
    int n = 0;
    Rational alpha;
    std::vector<Rational> coefficients;  // along decomposition_basis(n).t_values
    QVector rhs;                         // pairing of the divisor with each basis curve
};

/// Expands the interpolation divisor at a critical alpha over the bundle
/// basis. The solved coefficients are cross-checked against their closed
/// forms and for nonnegativity; alpha must be critical for n.
AlphaDecomposition decompose_a_alpha(int n, const Rational& alpha);

/// Closed-form expansion coefficients at a critical alpha.
std::vector<Rational> closed_form_coeffs(int n, const Rational& alpha);

/* Bracketing of an alpha between consecutive critical values, with the convex
 * weights that reproduce the interpolation divisor exactly:
 * A_alpha = weight_lower * A_lower + weight_upper * A_upper, coefficient by
 * coefficient. A critical alpha brackets to itself with weight 1. */
struct ConvexSplit {
    int n = 0;
    Rational alpha;
    Rational lower;
    Rational upper;
    Rational weight_lower;
    Rational weight_upper;
};

/// Requires 2/(floor(n/2)+1) <= alpha <= 1; the reproduction identity is
/// verified internally and a failure throws std::logic_error.
ConvexSplit convex_split(int n, const Rational& alpha);

/* Both sides of the telescoping identity
 * sum_{p=1}^m 1/((y-p)(y-p+1)(y-p+2)) = (2ym - m^2 + m)/(2y(y+1)(y-m)(y-m+1))
 * evaluated independently. Integer y in [-1, m] hits a pole and is rejected. */
struct IdentityCheck {
    Rational lhs;
    Rational rhs;
    bool equal = false;
};

IdentityCheck verify_identity(const Rational& y, int m);

/* Coordinates of a symmetric divisor on n = 6 in the two-bundle basis
 * (V(1/3), V(1/4)), together with the membership verdicts. The pairings a, b
 * are against the curves with shapes (2,2,1,1) and (3,1,1,1); when the
 * divisor falls outside the bundle cone, farkas holds a functional that is
 * nonnegative on both bundles and negative on the divisor. */
struct SgcMembership {
    Rational a;
    Rational b;
    Rational c1;
    Rational c2;
    bool fnef = false;
    bool member = false;
    std::optional<std::pair<Rational, Rational>> farkas;
};

SgcMembership sgc_membership_n6(const SymmetricDivisor& d);

/* Orbit-by-orbit audit of the 0-cell polarizations on n = 6: each reduced
 * symmetrized vector (a, b) is charged the coordinate f = a/4 - b/6 of the
 * first bundle; the claim under test is that f never goes negative. */
struct SgcOrbitRow {
    WeightVector representative;
    long long orbit_size = 0;
    Rational a;
    Rational b;
    Rational f_value;
};

struct SgcConjectureReport {
    bool holds = false;
    Rational min_f;
    std::vector<SgcOrbitRow> rows;
};

SgcConjectureReport check_sgc_conjecture_n6();

/* Exact nonnegative-combination solver: is target = sum c_j generators[j]
 * with all c_j >= 0? Runs phase-1 simplex with Bland's rule over rationals.
 * Feasible: coefficients holds the c_j. Infeasible: farkas holds w with
 * w . generators[j] >= 0 for every j and w . target < 0. Either certificate
 * is re-verified before being returned. */
struct NonnegCombination {
    bool feasible = false;
    QVector coefficients;
    QVector farkas;
};

NonnegCombination nonneg_combination(const std::vector<QVector>& generators,
                                     const QVector& target);

/// Membership of a symmetric divisor in the cone spanned by the bundles
/// V(a, n) for the given a values, decided in basis-curve pairing
/// coordinates.
NonnegCombination symmetric_cone_membership(int n, const SymmetricDivisor& target,
                                            const std::vector<Rational>& a_values);

}  // namespace gitnef
