#include "kreweras/csp.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace kreweras;

TEST_CASE("fixed point counts") {
    for (int n = 1; n <= 6; ++n) REQUIRE(fixed_point_count(n, 0) == catalan(n));
    REQUIRE(fixed_point_count(4, 1) == 0);
    REQUIRE(fixed_point_count(4, 4) == 6);
    REQUIRE_THROWS_AS(fixed_point_count(4, 8), std::domain_error);
    REQUIRE_THROWS_AS(fixed_point_count(13, 0), resource_limit_error);
}

TEST_CASE("fixed point counts depend only on gcd with 2n") {
    for (int n = 1; n <= 6; ++n)
        for (int c = 1; c < 2 * n; ++c)
            REQUIRE(fixed_point_count(n, c) == fixed_point_count(n, std::gcd(c, 2 * n)));
}

TEST_CASE("Burnside count over all rotations") {
    for (int n = 1; n <= 6; ++n) {
        BigInt total = 0;
        for (int c = 0; c < 2 * n; ++c) total += fixed_point_count(n, c);
        REQUIRE(total == BigInt(2 * n) * orbit_table(n).total_orbits());
    }
}

TEST_CASE("csp_verify passes at desk scale") {
    for (int n = 1; n <= 6; ++n) {
        const CspReport report = csp_verify(n);
        REQUIRE(report.pass);
        REQUIRE(report.condition1_pass);
        REQUIRE(report.condition2_pass);
        REQUIRE(report.gcd_invariance);
        REQUIRE(report.condition1_pass == report.condition2_pass);
        REQUIRE(report.condition2[0].residue == planar_count(n));
        if (n >= 2) REQUIRE(report.condition2[1].residue == asym_planar_count(n));
    }
}

TEST_CASE("csp_verify report details for n = 4") {
    const CspReport report = csp_verify(4);
    std::vector<BigInt> residues;
    for (const auto& check : report.condition2) residues.push_back(check.residue);
    REQUIRE(residues == std::vector<BigInt>{3, 1, 2, 1, 3, 1, 2, 1});
    // Divisors of 8: the identity fixes everything, the half-turn fixes 6,
    // the quarter-turn 2, the elementary rotation nothing.
    REQUIRE(report.condition1.size() == 4);
    for (const auto& check : report.condition1) {
        if (check.d == 1) REQUIRE(check.fixed_points == 14);
        if (check.d == 2) REQUIRE(check.fixed_points == 6);
        if (check.d == 4) REQUIRE(check.fixed_points == 2);
        if (check.d == 8) REQUIRE(check.fixed_points == 0);
        REQUIRE(check.divisible);
    }
}

TEST_CASE("csp_verify n = 6 residue zero counts all planar trees") {
    const CspReport report = csp_verify(6);
    REQUIRE(report.pass);
    REQUIRE(report.condition2[0].residue == 14);
    REQUIRE(planar_count(6) == 14);
}

TEST_CASE("csp_verify rejects out-of-domain input") {
    REQUIRE_THROWS_AS(csp_verify(0), std::domain_error);
    REQUIRE_THROWS_AS(csp_verify(13), resource_limit_error);
}
