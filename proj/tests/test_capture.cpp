#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <stdexcept>
#include <vector>

#include "gitnef/capture.hpp"

using gitnef::BlockPartition;
using gitnef::Rational;
using gitnef::TripleShape;
using gitnef::WeightedHypersimplex;
using gitnef::WeightVector;

namespace {

std::vector<int> range(int lo, int hi) {
    std::vector<int> out(hi - lo + 1);
    std::iota(out.begin(), out.end(), lo);
    return out;
}

}  // namespace

TEST_CASE("box extremes over a subset") {
    const WeightedHypersimplex box = WeightedHypersimplex::uniform(9, 3);
    CHECK(box.n() == 9);
    CHECK(box.min_mass(range(1, 5)) == Rational(2, 3));
    CHECK(box.max_mass(range(1, 5)) == Rational(5, 3));
    CHECK(box.min_mass(range(1, 9)) == Rational(2));
    CHECK(box.max_mass(range(1, 9)) == Rational(2));
    CHECK(box.min_mass({1}) == Rational(0));
    CHECK(box.max_mass({1}) == Rational(1, 3));

    CHECK_THROWS_AS(box.min_mass({0}), std::invalid_argument);
    CHECK_THROWS_AS(box.min_mass({10}), std::invalid_argument);
    CHECK_THROWS_AS(box.min_mass({1, 1}), std::invalid_argument);
}

TEST_CASE("box membership") {
    const WeightedHypersimplex box = WeightedHypersimplex::uniform(9, 3);
    CHECK(box.contains(WeightVector::parse("1/3,1/3,1/3,1/3,1/3,1/3,0,0,0")));
    CHECK_FALSE(box.contains(WeightVector::parse("2/5,1/3,1/3,1/3,1/3,4/15,0,0,0")));

    CHECK_THROWS_AS(WeightedHypersimplex::uniform(9, 0), std::invalid_argument);
    CHECK_THROWS_AS(WeightedHypersimplex({Rational(1, 2), Rational(1, 2), Rational(1, 2)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(WeightedHypersimplex({Rational(1), Rational(3, 2), Rational(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(WeightedHypersimplex({Rational(1), Rational(0), Rational(1), Rational(1)}),
                    std::invalid_argument);
}

TEST_CASE("block partition parsing and validation") {
    const BlockPartition p = BlockPartition::parse("1 2 | 3 4 | 5 6 | 7 8 | 9", 9);
    CHECK(p.width() == 5);
    CHECK(p.str() == "1 2 | 3 4 | 5 6 | 7 8 | 9");
    CHECK(p.blocks()[4] == std::vector<int>{9});

    CHECK_THROWS_AS(BlockPartition::parse("1 2 3 | 4 5 6", 6), std::invalid_argument);
    CHECK_THROWS_AS(BlockPartition::parse("1 2 | 3 4 | 5 5", 5), std::invalid_argument);
    CHECK_THROWS_AS(BlockPartition::parse("1 2 | 3 4 | 5 7", 6), std::invalid_argument);
    CHECK_THROWS_AS(BlockPartition::parse("1 2 | 3 4 | 5", 6), std::invalid_argument);
    CHECK_THROWS_AS(BlockPartition::parse("1 2 | | 3 4", 4), std::invalid_argument);
}

TEST_CASE("width reduction groups five equal blocks into three") {
    const WeightVector x = WeightVector::parse("1/5,1/5,1/5,1/5,1/5,1/5,1/5,1/5,2/5");
    const BlockPartition p = BlockPartition::parse("1 2 | 3 4 | 5 6 | 7 8 | 9", 9);
    const auto red = gitnef::reduce_width(x, p);

    CHECK(red.order == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK(red.j1 == 2);
    CHECK(red.j2 == 4);
    CHECK(red.groups[0] == std::vector<int>{1, 2});
    CHECK(red.groups[1] == std::vector<int>{3, 4, 5, 6});
    CHECK(red.groups[2] == std::vector<int>{7, 8, 9});
    CHECK(red.sums[0] == Rational(2, 5));
    CHECK(red.sums[1] == Rational(4, 5));
    CHECK(red.sums[2] == Rational(4, 5));
}

TEST_CASE("width reduction reorders unequal blocks first") {
    const WeightVector x = WeightVector::parse("3/10,3/10,1/5,1/5,1/2,1/2");
    const BlockPartition p = BlockPartition::parse("1 2 | 3 4 | 5 | 6", 6);
    const auto red = gitnef::reduce_width(x, p);

    CHECK(red.order == std::vector<std::size_t>{0, 2, 3, 1});
    CHECK(red.j1 == 2);
    CHECK(red.j2 == 3);
    CHECK(red.groups[0] == std::vector<int>{1, 2});
    CHECK(red.groups[1] == std::vector<int>{5});
    CHECK(red.groups[2] == std::vector<int>{3, 4, 6});
    CHECK(red.sums[0] == Rational(3, 5));
    CHECK(red.sums[1] == Rational(1, 2));
    CHECK(red.sums[2] == Rational(9, 10));
    for (const Rational& s : red.sums) CHECK(s < Rational(1));
}

TEST_CASE("width reduction rejects impossible inputs") {
    // A block of weight one cannot sit strictly inside the box.
    CHECK_THROWS_AS(
        gitnef::reduce_width(WeightVector::parse("1/2,1/2,1/3,1/3,1/6,1/6"),
                             BlockPartition::parse("1 2 | 3 4 | 5 | 6", 6)),
        std::domain_error);
    // Four blocks of one half tie on a wall, so no three-way merge works.
    CHECK_THROWS_AS(
        gitnef::reduce_width(WeightVector::parse("1/4,1/4,1/4,1/4,1/4,1/4,1/4,1/4"),
                             BlockPartition::parse("1 2 | 3 4 | 5 6 | 7 8", 8)),
        std::domain_error);
    // Vector length and partition support must agree.
    CHECK_THROWS_AS(
        gitnef::reduce_width(WeightVector::parse("1/2,1/2,1/2,1/2"),
                             BlockPartition::parse("1 2 | 3 4 | 5 6", 6)),
        std::invalid_argument);
}

TEST_CASE("triple shapes and the candidate filter") {
    using Shapes = std::vector<TripleShape>;
    CHECK(gitnef::triple_shapes(6) == Shapes{{4, 1, 1}, {3, 2, 1}, {2, 2, 2}});
    CHECK(gitnef::triple_str(TripleShape{3, 2, 1}) == "(3,2,1)");

    CHECK_FALSE(gitnef::is_candidate_shape({4, 1, 1}, 2));
    CHECK(gitnef::is_candidate_shape({3, 2, 1}, 2));
    CHECK(gitnef::is_candidate_shape({2, 2, 2}, 2));
    CHECK_THROWS_AS(gitnef::is_candidate_shape({1, 2, 3}, 2), std::invalid_argument);
}

TEST_CASE("candidate filter matches the box minimum") {
    // A wall meets the open uniform box exactly when the first block can dip
    // below mass one inside it.
    for (int n = 6; n <= 12; ++n) {
        for (int k = 2; k <= n / 2 - 1; ++k) {
            const WeightedHypersimplex box = WeightedHypersimplex::uniform(n, k);
            for (const TripleShape& s : gitnef::triple_shapes(n)) {
                const Rational lowest = box.min_mass(range(1, s[0]));
                CHECK(gitnef::is_candidate_shape(s, k) == (lowest < Rational(1)));
            }
        }
    }
}

TEST_CASE("witness for a six point crossing wall") {
    const auto w = gitnef::capture_witness(6, 2, {3, 2, 1});
    CHECK(w.a == Rational(1, 4));
    CHECK(w.t == 4);
    CHECK(w.odd_position == 6);
    CHECK(w.point.str() == "1/4,1/4,1/4,1/4,1/4,3/4");
    CHECK(w.block_sums[0] == Rational(3, 4));
    CHECK(w.block_sums[1] == Rational(1, 2));
    CHECK(w.block_sums[2] == Rational(3, 4));
    CHECK(w.in_interior);
    CHECK_FALSE(w.in_beta_box);

    const auto even = gitnef::capture_witness(6, 2, {2, 2, 2});
    CHECK(even.a == Rational(1, 3));
    CHECK(even.t == 3);
    CHECK(even.odd_position == 5);
    CHECK(even.point.str() == "1/3,1/3,1/3,1/3,1/3,1/3");
    CHECK(even.in_interior);
    CHECK(even.in_beta_box);

    CHECK_THROWS_AS(gitnef::capture_witness(6, 2, {4, 1, 1}), std::domain_error);
    CHECK_THROWS_AS(gitnef::capture_witness(6, 2, {3, 2, 2}), std::invalid_argument);
}

TEST_CASE("full certificates for small cases") {
    const auto c6 = gitnef::ampleness_certificate(6, 2);
    CHECK(c6.complete);
    REQUIRE(c6.witnesses.size() == 2);
    REQUIRE(c6.skipped.size() == 1);
    CHECK(c6.skipped[0] == TripleShape{4, 1, 1});
    CHECK(c6.witnesses[0].shape == TripleShape{3, 2, 1});
    CHECK(c6.witnesses[1].shape == TripleShape{2, 2, 2});

    const auto c8 = gitnef::ampleness_certificate(8, 2);
    CHECK(c8.complete);
    REQUIRE(c8.witnesses.size() == 4);
    CHECK(c8.skipped == std::vector<TripleShape>{{6, 1, 1}});
    CHECK(c8.witnesses[0].shape == TripleShape{5, 2, 1});
    CHECK(c8.witnesses[0].t == 6);
    CHECK(c8.witnesses[1].shape == TripleShape{4, 3, 1});
    CHECK(c8.witnesses[1].t == 6);
    CHECK(c8.witnesses[2].shape == TripleShape{4, 2, 2});
    CHECK(c8.witnesses[2].t == 5);
    CHECK(c8.witnesses[3].shape == TripleShape{3, 3, 2});
    CHECK(c8.witnesses[3].t == 5);

    const auto c9 = gitnef::ampleness_certificate(9, 3);
    CHECK(c9.complete);
    CHECK(c9.witnesses.size() == 5);
    CHECK(c9.skipped.size() == 2);
    for (const auto& w : c9.witnesses) {
        CHECK(w.in_interior);
        for (const Rational& s : w.block_sums) CHECK(s < Rational(1));
    }
}

TEST_CASE("witness block sums come from the stated point") {
    for (int n = 6; n <= 12; ++n) {
        for (int k = 2; k <= n / 2 - 1; ++k) {
            for (const auto& w : gitnef::ampleness_certificate(n, k).witnesses) {
                Rational first(0), second(0), third(0);
                int pos = 0;
                for (int i = 0; i < w.shape[0]; ++i) first += w.point[pos++];
                for (int i = 0; i < w.shape[1]; ++i) second += w.point[pos++];
                for (int i = 0; i < w.shape[2]; ++i) third += w.point[pos++];
                CHECK(first == w.block_sums[0]);
                CHECK(second == w.block_sums[1]);
                CHECK(third == w.block_sums[2]);
                CHECK(first + second + third == Rational(2));
                CHECK(w.a == Rational(1, w.t));
                CHECK(n / 2 <= w.t);
                CHECK(w.t <= n - k);
                CHECK(w.odd_position == w.shape[0] + w.shape[1] + 1);
                CHECK(w.point ==
                      gitnef::special_weight(w.a, w.odd_position, n));
            }
        }
    }
}

TEST_CASE("certificate domain limits") {
    CHECK_THROWS_AS(gitnef::ampleness_certificate(5, 2), std::invalid_argument);
    CHECK_THROWS_AS(gitnef::ampleness_certificate(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(gitnef::ampleness_certificate(6, 3), std::invalid_argument);
    CHECK_THROWS_AS(gitnef::ampleness_certificate(12, 6), std::invalid_argument);
}
