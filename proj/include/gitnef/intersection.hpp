#pragma once

#include <map>
#include <vector>

#include "gitnef/moduli.hpp"

namespace gitnef {

/// Degree of the weight-x polarization against a vital curve. With s_1..s_4
/// the four block sums of x this is
///   0            if max s_k >= 1,
///   2(1 - max)   if max <= 1 and max + min >= 1,
///   2 min        if max <= 1 and max + min <= 1;
/// the overlap cases agree, so the branch order is immaterial.
Rational intersect(const WeightVector& x, const CurveClass& curve);

/// Degree of the tensor product of all n special weights with parameter a
/// against a vital curve: the sum of intersect(special_weight(a, i, n), curve)
/// over i = 1..n. At a = 2/n every summand is identical and the result is n
/// times the single value.
Rational intersect_V(const Rational& a, int n, const CurveClass& curve);

/// Same, but any representative of the given shape works; evaluated on the
/// consecutive-interval representative.
Rational intersect_V_shape(const Rational& a, int n, const CurveShape& shape);

/// Degree of a symmetric divisor against any curve of the given shape
/// (n_1 >= n_2 >= n_3 >= n_4):
///   r_{n1+n2} + r_{n1+n3} + r_{n1+n4} - r_{n1} - r_{n2} - r_{n3} - r_{n4}
/// with r_0 = r_1 = 0 and r_j = r_{n-j}.
Rational intersect_symmetric(const SymmetricDivisor& D, const CurveShape& shape);

/// The interpolation divisor with parameter alpha in (2/(n-1), 1]. Writing
/// k = floor(2/alpha) - 1, the coefficient of D_j is
///   binom(j,2) alpha - j(j-1)/(n-1)                     for 2 <= j <= k,
///   ((j-2)(n-1) - j(j-1))/(n-1) + alpha                 for k+1 <= j <= floor(n/2).
SymmetricDivisor a_alpha(int n, const Rational& alpha);

/// floor(2/alpha) - 1.
int alpha_level(const Rational& alpha);

/// The critical parameter values {2/(k+1) : k = 1..floor(n/2)}, ascending.
/// Requires n >= 5.
std::vector<Rational> critical_alphas(int n);

/* Intersection numbers of one symmetric divisor class against every curve
 * shape, keyed by shape in descending lexicographic order. */
struct IntersectionVector {
    int n = 0;
    std::map<CurveShape, Rational, std::greater<CurveShape>> values;

    friend bool operator==(const IntersectionVector&, const IntersectionVector&) = default;
};

IntersectionVector intersection_vector(const SymmetricDivisor& D);
IntersectionVector intersection_vector_V(const Rational& a, int n);

struct FnefReport {
    bool fnef = false;
    IntersectionVector values;
    std::vector<std::pair<CurveShape, Rational>> violations;  // strictly negative only
};

/// Evaluates D against every curve shape and lists the strict violations.
FnefReport check_fnef(const SymmetricDivisor& D);

}  // namespace gitnef
