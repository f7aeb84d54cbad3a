#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gitnef/git_complex.hpp"
#include "gitnef/intersection.hpp"

using gitnef::Rational;
using gitnef::WallMask;
using gitnef::WeightVector;
using gitnef::ZeroCell;

namespace {

Rational wall_mass(const WeightVector& x, WallMask mask) {
    Rational total(0);
    for (int i : gitnef::wall_indices(mask)) total += x[i - 1];
    return total;
}

}  // namespace

TEST_CASE("canonical walls keep the first label and order by size") {
    const auto walls = gitnef::canonical_walls(4);
    REQUIRE(walls.size() == 7);
    using V = std::vector<int>;
    CHECK(gitnef::wall_indices(walls[0]) == V{1});
    CHECK(gitnef::wall_indices(walls[1]) == V{1, 2});
    CHECK(gitnef::wall_indices(walls[2]) == V{1, 3});
    CHECK(gitnef::wall_indices(walls[3]) == V{1, 4});
    CHECK(gitnef::wall_indices(walls[4]) == V{1, 2, 3});
    CHECK(gitnef::wall_indices(walls[5]) == V{1, 2, 4});
    CHECK(gitnef::wall_indices(walls[6]) == V{1, 3, 4});

    CHECK(gitnef::canonical_walls(6).size() == 31);
    CHECK(gitnef::canonical_walls(7).size() == 63);
}

TEST_CASE("wall canonicalization flips to the side containing label one") {
    // {2,3} inside n = 4 names the same wall as {1,4}.
    const WallMask flipped = gitnef::canonicalize_wall(0b0110u, 4);
    CHECK(gitnef::wall_indices(flipped) == std::vector<int>{1, 4});
    // Already canonical subsets stay put.
    const WallMask kept = gitnef::canonicalize_wall(0b0011u, 4);
    CHECK(gitnef::wall_indices(kept) == std::vector<int>{1, 2});
    CHECK_THROWS_AS(gitnef::canonicalize_wall(0b1111u, 4), std::invalid_argument);
    CHECK_THROWS_AS(gitnef::canonicalize_wall(0u, 4), std::invalid_argument);
}

TEST_CASE("four point cells are the six double points plus the center") {
    const auto cells = gitnef::enumerate_zero_cells(4);
    REQUIRE(cells.size() == 7);
    std::multiset<std::string> points;
    for (const ZeroCell& c : cells) points.insert(c.point.str());
    CHECK(points.count("1/2,1/2,1/2,1/2") == 1);
    CHECK(points.count("1,1,0,0") == 1);
    CHECK(points.count("0,1,1,0") == 1);

    CHECK(cells == gitnef::zero_cells_bruteforce(4));
}

TEST_CASE("five point cells match the brute force oracle") {
    const auto cells = gitnef::enumerate_zero_cells(5);
    CHECK(cells.size() == 20);
    CHECK(cells == gitnef::zero_cells_bruteforce(5));

    const auto orbits = gitnef::zero_cell_orbits(cells);
    REQUIRE(orbits.size() == 3);
    CHECK(orbits[0].representative.str() == "1,1,0,0,0");
    CHECK(orbits[0].orbit_size == 10);
    CHECK(orbits[1].representative.str() == "2/3,1/3,1/3,1/3,1/3");
    CHECK(orbits[1].orbit_size == 5);
    CHECK(orbits[2].representative.str() == "1/2,1/2,1/2,1/2,0");
    CHECK(orbits[2].orbit_size == 5);
}

TEST_CASE("six point cells match the brute force oracle") {
    const auto cells = gitnef::enumerate_zero_cells(6);
    CHECK(cells.size() == 142);
    CHECK(cells == gitnef::zero_cells_bruteforce(6));

    const auto orbits = gitnef::zero_cell_orbits(cells);
    REQUIRE(orbits.size() == 7);
    const std::vector<std::pair<std::string, long long>> expected = {
        {"1,1,0,0,0,0", 15},
        {"3/4,1/4,1/4,1/4,1/4,1/4", 6},
        {"2/3,1/3,1/3,1/3,1/3,0", 30},
        {"3/5,2/5,2/5,1/5,1/5,1/5", 60},
        {"1/2,1/2,1/2,1/2,0,0", 15},
        {"1/2,1/2,1/4,1/4,1/4,1/4", 15},
        {"1/3,1/3,1/3,1/3,1/3,1/3", 1},
    };
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(orbits[i].representative.str() == expected[i].first);
        CHECK(orbits[i].orbit_size == expected[i].second);
    }
}

TEST_CASE("active constraint lists are exactly the tight ones") {
    for (const ZeroCell& c : gitnef::enumerate_zero_cells(5)) {
        for (WallMask w : gitnef::canonical_walls(5)) {
            const bool tight = wall_mass(c.point, w) == Rational(1);
            const bool listed =
                std::find(c.active_walls.begin(), c.active_walls.end(), w) != c.active_walls.end();
            CHECK(tight == listed);
        }
        for (int i = 1; i <= 5; ++i) {
            const bool zero = c.point[i - 1].is_zero();
            const bool listed =
                std::find(c.active_zeros.begin(), c.active_zeros.end(), i) != c.active_zeros.end();
            CHECK(zero == listed);
        }
    }
}

TEST_CASE("domain limits for enumeration") {
    CHECK_THROWS_AS(gitnef::enumerate_zero_cells(3), std::invalid_argument);
    CHECK_THROWS_AS(gitnef::enumerate_zero_cells(8), std::invalid_argument);
    CHECK_THROWS_AS(gitnef::enumerate_zero_cells(11, true), std::invalid_argument);
    CHECK_THROWS_AS(gitnef::zero_cells_bruteforce(7), std::invalid_argument);
}

TEST_CASE("chamber signatures separate chambers and walls") {
    const WeightVector center = WeightVector::parse("1/2,1/2,1/2,1/2");
    const auto sig = gitnef::chamber_signature(center);
    const auto walls = gitnef::canonical_walls(4);
    REQUIRE(sig.sides.size() == walls.size());
    for (std::size_t i = 0; i < walls.size(); ++i) {
        const int size = static_cast<int>(gitnef::wall_indices(walls[i]).size());
        if (size == 1)
            CHECK(sig.sides[i] == gitnef::WallSide::below);
        else if (size == 2)
            CHECK(sig.sides[i] == gitnef::WallSide::on);
        else
            CHECK(sig.sides[i] == gitnef::WallSide::above);
    }

    const auto a = gitnef::chamber_signature(WeightVector::parse("3/5,1/2,1/2,2/5"));
    const auto b = gitnef::chamber_signature(WeightVector::parse("7/10,1/2,1/2,3/10"));
    CHECK(a == b);
    const auto c = gitnef::chamber_signature(WeightVector::parse("2/5,1/2,1/2,3/5"));
    CHECK_FALSE(a == c);
}

TEST_CASE("symmetrized generator vectors at six points") {
    const auto entries = gitnef::git_cone_generators(6, true);
    REQUIRE(entries.size() == 7);

    CHECK(entries[0].representative.str() == "1,1,0,0,0,0");
    CHECK(entries[0].degenerate);
    for (const auto& [shape, v] : entries[0].symmetric_vector.values) CHECK(v.is_zero());

    CHECK(entries[1].representative.str() == "3/4,1/4,1/4,1/4,1/4,1/4");
    CHECK(entries[1].symmetric_vector.values.at({2, 2, 1, 1}) == Rational(1));
    CHECK(entries[1].symmetric_vector.values.at({3, 1, 1, 1}) == Rational(3, 2));

    CHECK(entries[6].representative.str() == "1/3,1/3,1/3,1/3,1/3,1/3");
    CHECK(entries[6].symmetric_vector.values.at({2, 2, 1, 1}) == Rational(4));
    CHECK(entries[6].symmetric_vector.values.at({3, 1, 1, 1}) == Rational(0));
}

TEST_CASE("per cell generator vectors against the basis curves") {
    const auto entries = gitnef::git_cone_generators(6, false);
    CHECK(entries.size() == 142);
    bool found_center = false;
    for (const auto& e : entries) {
        REQUIRE(e.basis_vector.size() == 2);
        if (e.degenerate) {
            CHECK(e.basis_vector[0].is_zero());
            CHECK(e.basis_vector[1].is_zero());
        }
        if (e.representative.str() == "1/3,1/3,1/3,1/3,1/3,1/3") {
            found_center = true;
            CHECK(e.basis_vector[0] == Rational(2, 3));
            CHECK(e.basis_vector[1] == Rational(0));
        }
    }
    CHECK(found_center);
}
