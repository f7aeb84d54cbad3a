#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <variant>

#include "gitnef/linalg.hpp"

using gitnef::QMatrix;
using gitnef::QVector;
using gitnef::Rational;

namespace {

QMatrix from_rows(std::vector<std::vector<long long>> rows) {
    std::vector<QVector> q;
    for (const auto& r : rows) {
        QVector row;
        for (long long v : r) row.emplace_back(v);
        q.push_back(std::move(row));
    }
    return QMatrix(std::move(q));
}

QVector vec(std::vector<Rational> entries) { return entries; }

}  // namespace

TEST_CASE("identity system returns its right-hand side") {
    const QMatrix I = from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const QVector b = vec({Rational(3), Rational(-1, 2), Rational(7, 5)});
    const auto result = gitnef::solve(I, b);
    const auto* unique = std::get_if<gitnef::UniqueSolution>(&result);
    REQUIRE(unique != nullptr);
    CHECK(unique->x == b);
}

TEST_CASE("upper triangular pairing system solves by back substitution") {
    std::vector<QVector> rows = {
        vec({Rational(2), Rational(2, 3), Rational(4, 7)}),
        vec({Rational(0), Rational(4, 3), Rational(4, 7)}),
        vec({Rational(0), Rational(0), Rational(6, 7)}),
    };
    const QMatrix u{std::move(rows)};
    const QVector b = vec({Rational(3, 5), Rational(0), Rational(0)});
    const auto result = gitnef::solve(u, b);
    const auto* unique = std::get_if<gitnef::UniqueSolution>(&result);
    REQUIRE(unique != nullptr);
    CHECK(unique->x == vec({Rational(3, 10), Rational(0), Rational(0)}));
    CHECK(u.multiply(unique->x) == b);
}

TEST_CASE("fractional entries eliminate without drift") {
    const QMatrix a = from_rows({{1, 2, 3}, {2, 5, 3}, {1, 0, 8}});
    const QVector b = vec({Rational(1), Rational(2), Rational(3)});
    const auto result = gitnef::solve(a, b);
    const auto* unique = std::get_if<gitnef::UniqueSolution>(&result);
    REQUIRE(unique != nullptr);
    CHECK(a.multiply(unique->x) == b);
}

TEST_CASE("inconsistent rows give no solution") {
    const QMatrix a = from_rows({{1, 1}, {2, 2}});
    const QVector b = vec({Rational(1), Rational(3)});
    CHECK(std::holds_alternative<gitnef::NoSolution>(gitnef::solve(a, b)));
}

TEST_CASE("dependent consistent rows report the rank") {
    const QMatrix a = from_rows({{1, 1}, {2, 2}});
    const QVector b = vec({Rational(1), Rational(2)});
    const auto result = gitnef::solve(a, b);
    const auto* under = std::get_if<gitnef::Underdetermined>(&result);
    REQUIRE(under != nullptr);
    CHECK(under->rank == 1);
}

TEST_CASE("rectangular overdetermined but consistent system") {
    const QMatrix a = from_rows({{1, 0}, {0, 1}, {1, 1}});
    const QVector b = vec({Rational(2), Rational(3), Rational(5)});
    const auto result = gitnef::solve(a, b);
    const auto* unique = std::get_if<gitnef::UniqueSolution>(&result);
    REQUIRE(unique != nullptr);
    CHECK(unique->x == vec({Rational(2), Rational(3)}));

    const QVector bad = vec({Rational(2), Rational(3), Rational(6)});
    CHECK(std::holds_alternative<gitnef::NoSolution>(gitnef::solve(a, bad)));
}

TEST_CASE("rank") {
    CHECK(gitnef::rank(from_rows({{1, 1}, {1, 1}, {1, 1}})) == 1);
    CHECK(gitnef::rank(from_rows({{1, 2}, {3, 4}})) == 2);
    CHECK(gitnef::rank(from_rows({{0, 0}, {0, 0}})) == 0);
    CHECK(gitnef::rank(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 2);
    const QMatrix u = from_rows({{2, 1, 1}, {0, 3, 1}, {0, 0, 5}});
    CHECK(gitnef::rank(u) == 3);
}

TEST_CASE("multiply and dot") {
    const QMatrix a = from_rows({{1, 2}, {3, 4}});
    const QVector x = vec({Rational(1, 2), Rational(1, 3)});
    CHECK(a.multiply(x) == vec({Rational(7, 6), Rational(17, 6)}));
    CHECK(gitnef::dot(x, vec({Rational(2), Rational(3)})) == Rational(2));
}

TEST_CASE("matrix shape accessors") {
    QMatrix m(2, 3);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 3);
    m.at(1, 2) = Rational(5, 7);
    CHECK(m.row(1)[2] == Rational(5, 7));
    QMatrix same(2, 3);
    same.at(1, 2) = Rational(5, 7);
    CHECK(m == same);
}
