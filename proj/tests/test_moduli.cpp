#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <stdexcept>

#include "gitnef/moduli.hpp"

using gitnef::CurveClass;
using gitnef::CurveShape;
using gitnef::Rational;
using gitnef::SymmetricDivisor;
using gitnef::WeightVector;

TEST_CASE("weight vector parse and round trip") {
    const WeightVector x = WeightVector::parse("1/5,1/5,1/5,1/5,1/5,1/5,1/5,1/5,2/5");
    CHECK(x.n() == 9);
    CHECK(x[8] == Rational(2, 5));
    CHECK(WeightVector::parse(x.str()) == x);
    CHECK_THROWS_AS(WeightVector::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(WeightVector::parse("1/2,,1/2"), std::invalid_argument);
}

TEST_CASE("special weight vectors") {
    const WeightVector x = gitnef::special_weight(Rational(1, 5), 3, 9);
    CHECK(x.n() == 9);
    CHECK(x[2] == Rational(2, 5));
    for (int i = 0; i < 9; ++i) {
        if (i != 2)
            CHECK(x[i] == Rational(1, 5));
    }
    Rational total(0);
    for (int i = 0; i < 9; ++i) total += x[i];
    CHECK(total == Rational(2));

    CHECK(gitnef::special_weight_odd_entry(Rational(1, 5), 9) == Rational(2, 5));
    CHECK(gitnef::special_weight_odd_entry(Rational(1, 4), 9) == Rational(0));
    CHECK(gitnef::special_weight_odd_entry(Rational(1, 8), 9) == Rational(1));

    CHECK_THROWS_AS(gitnef::special_weight(Rational(1, 9), 1, 9), std::domain_error);
    CHECK_THROWS_AS(gitnef::special_weight(Rational(1, 3), 1, 9), std::domain_error);
    CHECK_THROWS_AS(gitnef::special_weight(Rational(1, 5), 0, 9), std::domain_error);
    CHECK_THROWS_AS(gitnef::special_weight(Rational(1, 5), 10, 9), std::domain_error);
}

TEST_CASE("curve class parse, shape, and equality up to block order") {
    const CurveClass c = CurveClass::parse("1 2 3 4 | 5 6 7 | 8 | 9", 9);
    CHECK(c.shape() == CurveShape{4, 3, 1, 1});
    CHECK(c.str() == "1 2 3 4 | 5 6 7 | 8 | 9");
    CHECK(CurveClass::parse(c.str(), 9).same_class(c));
    CHECK(CurveClass::parse("9 | 5 6 7 | 1 2 3 4 | 8", 9).same_class(c));
    CHECK_FALSE(CurveClass::parse("1 2 3 5 | 4 6 7 | 8 | 9", 9).same_class(c));

    CHECK_THROWS_AS(CurveClass::parse("1 2 | 3 4 | 5 6", 6), std::invalid_argument);
    CHECK_THROWS_AS(CurveClass::parse("1 2 | 3 4 | 5 | 5", 6), std::invalid_argument);
    CHECK_THROWS_AS(CurveClass::parse("1 2 | 3 4 | 5 | 7", 6), std::invalid_argument);
    CHECK_THROWS_AS(CurveClass::parse("1 2 | 3 4 | 5 | 6 | 7", 7), std::invalid_argument);
}

TEST_CASE("curve shapes enumerate partitions into four parts") {
    using Shapes = std::vector<CurveShape>;
    CHECK(gitnef::curve_shapes(4) == Shapes{{1, 1, 1, 1}});
    CHECK(gitnef::curve_shapes(6) == Shapes{{3, 1, 1, 1}, {2, 2, 1, 1}});
    CHECK(gitnef::curve_shapes(8) == Shapes{{5, 1, 1, 1},
                                            {4, 2, 1, 1},
                                            {3, 3, 1, 1},
                                            {3, 2, 2, 1},
                                            {2, 2, 2, 2}});
    CHECK(gitnef::curve_shapes(9) == Shapes{{6, 1, 1, 1},
                                            {5, 2, 1, 1},
                                            {4, 3, 1, 1},
                                            {4, 2, 2, 1},
                                            {3, 3, 2, 1},
                                            {3, 2, 2, 2}});
    for (const CurveShape& s : gitnef::curve_shapes(12)) CHECK(gitnef::shape_sum(s) == 12);
    CHECK(gitnef::shape_str(CurveShape{4, 3, 1, 1}) == "4,3,1,1");
    CHECK(gitnef::parse_shape("4,3,1,1") == CurveShape{4, 3, 1, 1});
    CHECK_THROWS_AS(gitnef::parse_shape("4,3,1"), std::invalid_argument);
}

TEST_CASE("interval curves tile consecutive labels") {
    const CurveClass c = gitnef::interval_curve({4, 3, 1, 1}, 9);
    CHECK(c.str() == "1 2 3 4 | 5 6 7 | 8 | 9");
    CHECK(c.shape() == CurveShape{4, 3, 1, 1});
    CHECK_THROWS_AS(gitnef::interval_curve({4, 3, 1, 1}, 10), std::invalid_argument);
}

TEST_CASE("basis curves and their shapes") {
    const auto b6 = gitnef::basis_curves(6);
    REQUIRE(b6.size() == 2);
    CHECK(b6[0].shape() == CurveShape{2, 2, 1, 1});
    CHECK(b6[1].shape() == CurveShape{3, 1, 1, 1});

    const auto b9 = gitnef::basis_curves(9);
    REQUIRE(b9.size() == 3);
    CHECK(b9[0].shape() == CurveShape{4, 3, 1, 1});
    CHECK(b9[1].shape() == CurveShape{5, 2, 1, 1});
    CHECK(b9[2].shape() == CurveShape{6, 1, 1, 1});

    const auto b8 = gitnef::basis_curves(8);
    REQUIRE(b8.size() == 3);
    CHECK(b8[0].shape() == CurveShape{3, 3, 1, 1});
    CHECK(b8[1].shape() == CurveShape{4, 2, 1, 1});
    CHECK(b8[2].shape() == CurveShape{5, 1, 1, 1});

    CHECK_THROWS_AS(gitnef::basis_curves(4), std::domain_error);
}

TEST_CASE("symmetric divisor coefficients fold at the midpoint") {
    const SymmetricDivisor d(9, {{2, Rational(3, 20)}, {3, Rational(9, 20)}, {4, Rational(9, 10)}});
    CHECK(d.r(2) == Rational(3, 20));
    CHECK(d.r(7) == Rational(3, 20));
    CHECK(d.r(4) == Rational(9, 10));
    CHECK(d.r(5) == Rational(9, 10));
    CHECK(d.r(0) == Rational(0));
    CHECK(d.r(1) == Rational(0));
    CHECK(d.r(9) == Rational(0));
    CHECK(d.str() == "r2=3/20,r3=9/20,r4=9/10");
    CHECK(SymmetricDivisor::parse(d.str(), 9).coeffs() == d.coeffs());

    CHECK_THROWS_AS(SymmetricDivisor(9, {{2, Rational(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricDivisor(6, {{2, Rational(1)}, {3, Rational(1)}, {4, Rational(1)}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(SymmetricDivisor::parse("r2=1,r5=1", 6), std::invalid_argument);
}

TEST_CASE("orbit enumeration counts distinct rearrangements") {
    const WeightVector two_ones = WeightVector::parse("1,1,0,0,0,0");
    const auto o1 = gitnef::orbit(two_ones);
    CHECK(o1.representatives.size() == 15);
    CHECK(o1.multiplicity == 48);  // 2! * 4! arrangements fixing the multiset

    const auto o2 = gitnef::orbit(WeightVector::parse("1/3,1/3,1/3,1/3,1/3,1/3"));
    CHECK(o2.representatives.size() == 1);
    CHECK(o2.multiplicity == 720);

    const auto o3 = gitnef::orbit(WeightVector::parse("3/5,2/5,2/5,1/5,1/5,1/5"));
    CHECK(o3.representatives.size() == 60);

    CHECK(gitnef::factorial_ll(6) == 720);
    CHECK(gitnef::factorial_ll(0) == 1);
}
