#include "gitnef/cone.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gitnef {

namespace {

void check_cone_n(int n) {
    if (n < 5)
        throw std::invalid_argument("bundle decompositions need n >= 5");
}

/* Closed form of the pairing V(1/t_j) . C_i. Row index i is the curve, column
 * index j is the bundle, both 1-based here. The matrix is upper triangular
 * with positive diagonal. */
Rational closed_form_pairing(int n, int i, int j) {
    const int f = n / 2;
    if (i > j)
        return Rational(0);
    if (n % 2 == 1) {
        if (i == j)
            return Rational(2 * (f - j + 2), f + j);
        return Rational(4, f + j);
    }
    if (i == 1 && j == 1)
        return Rational(4);
    if (i == j)
        return Rational(2 * (f - j + 2), f + j - 1);
    return Rational(4, f + j - 1);
}

int find_critical_level(int n, const Rational& alpha) {
    const int f = n / 2;
    for (int k = 1; k <= f; ++k)
        if (alpha == Rational(2, k + 1))
            return k;
    return 0;
}

}  // namespace

DecompositionBasis decomposition_basis(int n) {
    check_cone_n(n);
    const int f = n / 2;
    DecompositionBasis basis;
    basis.n = n;
    for (int i = 1; i <= f - 1; ++i)
        basis.t_values.push_back(n % 2 == 1 ? f + i : f + i - 1);
    basis.curves = basis_curves(n);
    return basis;
}

TriangularSystem build_system(int n) {
    DecompositionBasis basis = decomposition_basis(n);
    const std::size_t m = basis.t_values.size();
    QMatrix u(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const Rational a(1, basis.t_values[j]);
            const Rational value = intersect_V(a, n, basis.curves[i]);
            const Rational expected =
                closed_form_pairing(n, static_cast<int>(i) + 1, static_cast<int>(j) + 1);
            if (value != expected)
                throw std::logic_error("bundle-curve pairing disagrees with its closed form at (" +
                                       std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                       "): " + value.str() + " vs " + expected.str());
            u.at(i, j) = value;
        }
    }
    return TriangularSystem{std::move(basis), std::move(u)};
}

std::vector<Rational> closed_form_coeffs(int n, const Rational& alpha) {
    check_cone_n(n);
    const int f = n / 2;
    const int k = find_critical_level(n, alpha);
    if (k == 0)
        throw std::domain_error("closed_form_coeffs: alpha is not critical for this n");
    const int l = f + 1 - k;

    std::vector<Rational> c(static_cast<std::size_t>(f - 1), Rational(0));
    if (n % 2 == 1) {
        for (int i = 1; i <= f - 1; ++i) {
            if (i <= l - 1)
                c[static_cast<std::size_t>(i - 1)] =
                    alpha * Rational(f + i) * Rational(f - l + 1) /
                    Rational(static_cast<long long>(f - i) * (f - i + 1) * (f - i + 2));
            else if (i == l)
                c[static_cast<std::size_t>(i - 1)] =
                    alpha * Rational(f + l) * Rational(f - l) / Rational(4 * (f - l + 2));
        }
        return c;
    }
    if (l == 1) {
        c[0] = Rational(f - 2, 2 * (f + 1));
        return c;
    }
    c[0] = alpha * Rational(f - l + 1) / Rational(2 * f * (f - 1));
    for (int i = 2; i <= f - 1; ++i) {
        if (i <= l - 1)
            c[static_cast<std::size_t>(i - 1)] =
                alpha * Rational(f - l + 1) * Rational(f - 1 + i) /
                Rational(static_cast<long long>(f - i) * (f - i + 1) * (f - i + 2));
        else if (i == l)
            c[static_cast<std::size_t>(i - 1)] =
                alpha * Rational(f - l) * Rational(f + l - 1) / Rational(4 * (f - l + 2));
    }
    return c;
}

AlphaDecomposition decompose_a_alpha(int n, const Rational& alpha) {
    check_cone_n(n);
    if (find_critical_level(n, alpha) == 0)
        throw std::domain_error("decompose_a_alpha: alpha is not critical for this n");

    TriangularSystem sys = build_system(n);
    const SymmetricDivisor d = a_alpha(n, alpha);
    const std::size_t m = sys.basis.t_values.size();
    QVector rhs(m);
    for (std::size_t i = 0; i < m; ++i)
        rhs[i] = intersect_symmetric(d, sys.basis.curves[i].shape());

    const SolveResult res = solve(sys.u, rhs);
    const auto* unique = std::get_if<UniqueSolution>(&res);
    if (unique == nullptr)
        throw std::logic_error("decompose_a_alpha: pairing system is singular");

    const std::vector<Rational> expected = closed_form_coeffs(n, alpha);
    for (std::size_t i = 0; i < m; ++i) {
        if (unique->x[i] != expected[i])
            throw std::logic_error("decompose_a_alpha: solved coefficient " + unique->x[i].str() +
                                   " disagrees with closed form " + expected[i].str());
        if (unique->x[i].sign() < 0)
            throw std::logic_error("decompose_a_alpha: negative coefficient " +
                                   unique->x[i].str());
    }

    return AlphaDecomposition{n, alpha, unique->x, std::move(rhs)};
}

ConvexSplit convex_split(int n, const Rational& alpha) {
    check_cone_n(n);
    const int f = n / 2;
    const Rational least(2, f + 1);
    if (alpha < least || Rational(1) < alpha)
        throw std::domain_error("convex_split: alpha outside [2/(floor(n/2)+1), 1]");

    ConvexSplit split;
    split.n = n;
    split.alpha = alpha;
    if (find_critical_level(n, alpha) != 0) {
        split.lower = alpha;
        split.upper = alpha;
        split.weight_lower = Rational(0);
        split.weight_upper = Rational(1);
        return split;
    }

    const int k = alpha_level(alpha);
    if (k + 1 > f)
        throw std::logic_error("convex_split: bracketing level escaped the critical range");
    split.lower = Rational(2, k + 2);
    split.upper = Rational(2, k + 1);
    split.weight_upper = (alpha - split.lower) / (split.upper - split.lower);
    split.weight_lower = Rational(1) - split.weight_upper;

    const SymmetricDivisor direct = a_alpha(n, alpha);
    const SymmetricDivisor lo = a_alpha(n, split.lower);
    const SymmetricDivisor hi = a_alpha(n, split.upper);
    for (int j = 2; j <= f; ++j) {
        const Rational mixed = split.weight_lower * lo.r(j) + split.weight_upper * hi.r(j);
        if (mixed != direct.r(j))
            throw std::logic_error("convex_split: mixture misses coefficient r" +
                                   std::to_string(j) + ": " + mixed.str() + " vs " +
                                   direct.r(j).str());
    }
    return split;
}

IdentityCheck verify_identity(const Rational& y, int m) {
    if (m < 1)
        throw std::invalid_argument("verify_identity: m must be positive");
    if (y.is_integer() && Rational(-1) <= y && y <= Rational(m))
        throw std::domain_error("verify_identity: integer y in [-1, m] hits a pole");

    Rational lhs(0);
    for (int p = 1; p <= m; ++p) {
        const Rational t0 = y - Rational(p);
        const Rational t1 = y - Rational(p - 1);
        const Rational t2 = y - Rational(p - 2);
        lhs += Rational(1) / (t0 * t1 * t2);
    }
    const Rational num = Rational(2) * y * Rational(m) - Rational(m) * Rational(m) + Rational(m);
    const Rational den =
        Rational(2) * y * (y + Rational(1)) * (y - Rational(m)) * (y - Rational(m) + Rational(1));
    const Rational rhs = num / den;
    return IdentityCheck{lhs, rhs, lhs == rhs};
}

SgcMembership sgc_membership_n6(const SymmetricDivisor& d) {
    if (d.n() != 6)
        throw std::invalid_argument("sgc_membership_n6: divisor must live on n = 6");

    SgcMembership out;
    out.a = intersect_symmetric(d, CurveShape{2, 2, 1, 1});
    out.b = intersect_symmetric(d, CurveShape{3, 1, 1, 1});
    out.c1 = out.a / Rational(4) - out.b / Rational(6);
    out.c2 = Rational(2) * out.b / Rational(3);
    out.fnef = out.a.sign() >= 0 && out.b.sign() >= 0;
    out.member = out.c1.sign() >= 0 && out.c2.sign() >= 0;

    if (!out.member) {
        // Functional vanishing on one generator and positive on the other,
        // taken from whichever coordinate went negative.
        const std::pair<Rational, Rational> w = out.c1.sign() < 0
                                                    ? std::pair{Rational(1, 4), Rational(-1, 6)}
                                                    : std::pair{Rational(0), Rational(1)};
        const std::pair<Rational, Rational> g1{Rational(4), Rational(0)};
        const std::pair<Rational, Rational> g2{Rational(1), Rational(3, 2)};
        const Rational on_g1 = w.first * g1.first + w.second * g1.second;
        const Rational on_g2 = w.first * g2.first + w.second * g2.second;
        const Rational on_target = w.first * out.a + w.second * out.b;
        if (on_g1.sign() < 0 || on_g2.sign() < 0 || on_target.sign() >= 0)
            throw std::logic_error("sgc_membership_n6: separating functional failed its check");
        out.farkas = w;
    }
    return out;
}

SgcConjectureReport check_sgc_conjecture_n6() {
    const std::vector<ConeGeneratorEntry> gens = git_cone_generators(6, true);
    SgcConjectureReport report;
    bool first = true;
    for (const ConeGeneratorEntry& e : gens) {
        const Rational a = e.symmetric_vector.values.at(CurveShape{2, 2, 1, 1});
        const Rational b = e.symmetric_vector.values.at(CurveShape{3, 1, 1, 1});
        const Rational f = a / Rational(4) - b / Rational(6);
        if (first || f < report.min_f) {
            report.min_f = f;
            first = false;
        }
        report.rows.push_back(SgcOrbitRow{e.representative, e.orbit_size, a, b, f});
    }
    report.holds = report.min_f.sign() >= 0;
    return report;
}

NonnegCombination nonneg_combination(const std::vector<QVector>& generators,
                                     const QVector& target) {
    const std::size_t m = target.size();
    if (m == 0)
        throw std::invalid_argument("nonneg_combination: empty target");
    for (const QVector& g : generators)
        if (g.size() != m)
            throw std::invalid_argument("nonneg_combination: generator dimension mismatch");

    const std::size_t ng = generators.size();
    const std::size_t ncols = ng + m;  // originals then artificials
    const std::size_t rhs = ncols;

    // Phase-1 tableau with artificial basis; rows are sign-adjusted so the
    // right-hand side is nonnegative.
    std::vector<int> sign(m, 1);
    std::vector<QVector> T(m, QVector(ncols + 1, Rational(0)));
    for (std::size_t i = 0; i < m; ++i) {
        if (target[i].sign() < 0)
            sign[i] = -1;
        for (std::size_t j = 0; j < ng; ++j)
            T[i][j] = sign[i] == 1 ? generators[j][i] : -generators[j][i];
        T[i][ng + i] = Rational(1);
        T[i][rhs] = sign[i] == 1 ? target[i] : -target[i];
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t i = 0; i < m; ++i) basis[i] = ng + i;

    // Reduced-cost row for minimizing the artificial sum: z_j = c_j - sum of
    // basic-cost-weighted column entries. The stored rhs entry is -objective.
    QVector z(ncols + 1, Rational(0));
    for (std::size_t j = 0; j <= ncols; ++j) {
        Rational colsum(0);
        for (std::size_t i = 0; i < m; ++i) colsum += T[i][j];
        z[j] = (j >= ng && j < ncols ? Rational(1) : Rational(0)) - colsum;
    }

    while (true) {
        std::size_t enter = ncols;
        for (std::size_t j = 0; j < ncols; ++j) {
            if (z[j].sign() < 0) {
                enter = j;
                break;  // Bland: lowest eligible index
            }
        }
        if (enter == ncols)
            break;

        std::size_t leave = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (T[i][enter].sign() <= 0)
                continue;
            if (leave == m)
                leave = i;
            else {
                const Rational cur = T[i][rhs] * T[leave][enter];
                const Rational best = T[leave][rhs] * T[i][enter];
                if (cur < best || (cur == best && basis[i] < basis[leave]))
                    leave = i;
            }
        }
        if (leave == m)
            throw std::logic_error("nonneg_combination: unbounded phase-1 objective");

        const Rational pivot = T[leave][enter];
        for (std::size_t j = 0; j <= ncols; ++j) T[leave][j] /= pivot;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == leave || T[i][enter].is_zero())
                continue;
            const Rational factor = T[i][enter];
            for (std::size_t j = 0; j <= ncols; ++j) T[i][j] -= factor * T[leave][j];
        }
        if (!z[enter].is_zero()) {
            const Rational factor = z[enter];
            for (std::size_t j = 0; j <= ncols; ++j) z[j] -= factor * T[leave][j];
        }
        basis[leave] = enter;
    }

    NonnegCombination out;
    const Rational objective = -z[rhs];
    if (objective.is_zero()) {
        out.feasible = true;
        out.coefficients.assign(ng, Rational(0));
        for (std::size_t i = 0; i < m; ++i)
            if (basis[i] < ng)
                out.coefficients[basis[i]] = T[i][rhs];
        for (const Rational& c : out.coefficients)
            if (c.sign() < 0)
                throw std::logic_error("nonneg_combination: negative coefficient slipped through");
        for (std::size_t i = 0; i < m; ++i) {
            Rational acc(0);
            for (std::size_t j = 0; j < ng; ++j) acc += out.coefficients[j] * generators[j][i];
            if (acc != target[i])
                throw std::logic_error("nonneg_combination: combination misses the target");
        }
        return out;
    }

    out.feasible = false;
    out.farkas.assign(m, Rational(0));
    for (std::size_t i = 0; i < m; ++i) {
        const Rational y = Rational(1) - z[ng + i];
        out.farkas[i] = sign[i] == 1 ? -y : y;
    }
    for (std::size_t j = 0; j < ng; ++j)
        if (dot(out.farkas, generators[j]).sign() < 0)
            throw std::logic_error("nonneg_combination: separating functional fails a generator");
    if (dot(out.farkas, target).sign() >= 0)
        throw std::logic_error("nonneg_combination: separating functional fails the target");
    return out;
}

NonnegCombination symmetric_cone_membership(int n, const SymmetricDivisor& target,
                                            const std::vector<Rational>& a_values) {
    check_cone_n(n);
    if (target.n() != n)
        throw std::invalid_argument("symmetric_cone_membership: divisor lives on a different n");

    const std::vector<CurveClass> curves = basis_curves(n);
    std::vector<QVector> gens;
    gens.reserve(a_values.size());
    for (const Rational& a : a_values) {
        QVector col;
        col.reserve(curves.size());
        for (const CurveClass& c : curves) col.push_back(intersect_V(a, n, c));
        gens.push_back(std::move(col));
    }
    QVector t;
    t.reserve(curves.size());
    for (const CurveClass& c : curves) t.push_back(intersect_symmetric(target, c.shape()));
    return nonneg_combination(gens, t);
}

}  // namespace gitnef
