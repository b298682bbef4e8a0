#include "kreweras/counting.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <set>

using namespace kreweras;

TEST_CASE("closed forms on the worked values") {
    REQUIRE(rooted_planar_count(2) == 2);
    REQUIRE(rooted_planar_count(3) == 4);
    REQUIRE(rooted_planar_count(4) == 10);
    REQUIRE(asym_rooted_planar_count(1) == 1);
    REQUIRE(asym_rooted_planar_count(2) == 1);
    REQUIRE(asym_rooted_planar_count(4) == 8);
    REQUIRE(planar_count(4) == 3);
    REQUIRE(asym_planar_count(4) == 1);
    REQUIRE(planar_count(3) == 2);
    REQUIRE(asym_planar_count(3) == 0);
    REQUIRE_THROWS_AS(planar_count(0), std::domain_error);
}

TEST_CASE("closed forms match brute force") {
    for (int n = 1; n <= 8; ++n) {
        REQUIRE(rooted_planar_count(n) == rooted_planar_count_bruteforce(n));
        REQUIRE(asym_rooted_planar_count(n) == asym_rooted_planar_count_bruteforce(n));
        REQUIRE(planar_count(n) == planar_count_bruteforce(n));
        REQUIRE(asym_planar_count(n) == asym_planar_count_bruteforce(n));
    }
}

TEST_CASE("brute-force counters on the worked values") {
    REQUIRE(planar_count_bruteforce(4) == 3);
    REQUIRE(rooted_planar_count_bruteforce(3) == 4);
    REQUIRE(asym_planar_count_bruteforce(5) == 3);
    REQUIRE_THROWS_AS(planar_count_bruteforce(13), resource_limit_error);
}

TEST_CASE("difference identity between the planar and rooted counts") {
    for (int n = 1; n <= 20; ++n) {
        BigInt lhs = planar_count(n) - asym_planar_count(n);
        BigInt rhs = rooted_planar_count(n) - asym_rooted_planar_count(n);
        if (chi_odd(n)) rhs += catalan((n - 1) / 2);
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("all four formulas divide exactly up to n = 64") {
    for (int n = 1; n <= 64; ++n) {
        REQUIRE_NOTHROW(count_report(n));
        REQUIRE(planar_count(n) >= 0);
        REQUIRE(asym_planar_count(n) >= 0);
        REQUIRE(asym_planar_count(n) <= planar_count(n));
        REQUIRE(asym_rooted_planar_count(n) <= rooted_planar_count(n));
    }
}

TEST_CASE("reroot orbits and symmetry order") {
    auto orbit = reroot_orbit(star_center(2));
    REQUIRE(orbit.size() == 2);
    REQUIRE(orbit[0] == star_center(2));
    REQUIRE(orbit[1] == star_leaf(2));
    for (int n = 2; n <= 8; ++n) REQUIRE(symmetry_order(star_center(n)) == n);
    // The single edge is fixed by rerooting and carries the half-turn.
    REQUIRE(symmetry_order(star_center(1)) == 2);
}

TEST_CASE("canonical form is constant on orbits, symmetry order divides 2n") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& t : enumerate_trees(n)) {
            const PlaneTree canon = canonical_planar(t);
            REQUIRE(canonical_planar(reroot(t)) == canon);
            REQUIRE(!(canon.dyck() > t.dyck()));
            REQUIRE(2 * n % symmetry_order(t) == 0);
            REQUIRE(symmetry_order(reroot(t)) == symmetry_order(t));
        }
    }
}
