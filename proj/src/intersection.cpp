#include "gitnef/intersection.hpp"

#include <algorithm>
#include <stdexcept>

namespace gitnef {

Rational intersect(const WeightVector& x, const CurveClass& curve) {
    if (x.n() != curve.n())
        throw std::invalid_argument("intersect: weight and curve sizes differ");
    Rational sums[4];
    for (int k = 0; k < 4; ++k) {
        for (int idx : curve.blocks()[k])
            sums[k] += x[idx - 1];
    }
    Rational mx = sums[0], mn = sums[0];
    for (int k = 1; k < 4; ++k) {
        if (sums[k] > mx)
            mx = sums[k];
        if (sums[k] < mn)
            mn = sums[k];
    }
    const Rational one(1);
    if (mx >= one)
        return Rational(0);
    if (mx + mn >= one)
        return Rational(2) * (one - mx);
    return Rational(2) * mn;
}

Rational intersect_V(const Rational& a, int n, const CurveClass& curve) {
    if (curve.n() != n)
        throw std::invalid_argument("intersect_V: curve size mismatch");
    Rational total;
    for (int i = 1; i <= n; ++i)
        total += intersect(special_weight(a, i, n), curve);
    return total;
}

Rational intersect_V_shape(const Rational& a, int n, const CurveShape& shape) {
    if (shape_sum(shape) != n)
        throw std::invalid_argument("intersect_V_shape: shape does not sum to n");
    return intersect_V(a, n, interval_curve(shape, n));
}

Rational intersect_symmetric(const SymmetricDivisor& D, const CurveShape& shape) {
    if (shape_sum(shape) != D.n())
        throw std::invalid_argument("intersect_symmetric: shape does not sum to n");
    Rational v;
    for (int k = 1; k < 4; ++k)
        v += D.r(shape[0] + shape[k]);
    for (int k = 0; k < 4; ++k)
        v -= D.r(shape[k]);
    return v;
}

int alpha_level(const Rational& alpha) {
    if (alpha.sign() <= 0)
        throw std::domain_error("alpha_level: alpha must be positive");
    return static_cast<int>((Rational(2) / alpha).floor()) - 1;
}

SymmetricDivisor a_alpha(int n, const Rational& alpha) {
    if (n < 4)
        throw std::domain_error("a_alpha: n must be at least 4");
    if (alpha <= Rational(2, n - 1) || alpha > Rational(1))
        throw std::domain_error("a_alpha: alpha outside (2/(n-1), 1]");
    const int k = alpha_level(alpha);
    std::map<int, Rational> coeffs;
    for (int j = 2; j <= n / 2; ++j) {
        if (j <= k) {
            coeffs[j] = Rational(static_cast<long long>(j) * (j - 1), 2) * alpha -
                        Rational(static_cast<long long>(j) * (j - 1), n - 1);
        } else {
            coeffs[j] = Rational(static_cast<long long>(j - 2) * (n - 1) -
                                     static_cast<long long>(j) * (j - 1),
                                 n - 1) +
                        alpha;
        }
    }
    return SymmetricDivisor(n, std::move(coeffs));
}

std::vector<Rational> critical_alphas(int n) {
    if (n < 5)
        throw std::domain_error("critical_alphas: n must be at least 5");
    std::vector<Rational> out;
    for (int k = n / 2; k >= 1; --k)
        out.emplace_back(2, k + 1);
    return out;
}

IntersectionVector intersection_vector(const SymmetricDivisor& D) {
    IntersectionVector v;
    v.n = D.n();
    for (const auto& s : curve_shapes(D.n()))
        v.values.emplace(s, intersect_symmetric(D, s));
    return v;
}

IntersectionVector intersection_vector_V(const Rational& a, int n) {
    IntersectionVector v;
    v.n = n;
    for (const auto& s : curve_shapes(n))
        v.values.emplace(s, intersect_V_shape(a, n, s));
    return v;
}

FnefReport check_fnef(const SymmetricDivisor& D) {
    FnefReport report;
    report.values = intersection_vector(D);
    for (const auto& [shape, value] : report.values.values) {
        if (value.sign() < 0)
            report.violations.emplace_back(shape, value);
    }
    report.fnef = report.violations.empty();
    return report;
}

}  // namespace gitnef
