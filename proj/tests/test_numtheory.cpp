#include "kreweras/numtheory.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <numeric>

using namespace kreweras;

TEST_CASE("catalan matches the known sequence") {
    const long long expected[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012};
    for (int n = 0; n <= 12; ++n) REQUIRE(catalan(n) == expected[n]);
    REQUIRE_THROWS_AS(catalan(-1), std::domain_error);
}

TEST_CASE("binomial against Pascal recurrence") {
    for (int n = 1; n <= 20; ++n)
        for (int k = 0; k <= n; ++k) REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    REQUIRE(binomial(4, 2) == 6);
    REQUIRE(binomial(66, 33) % 1 == 0);  // exercises the multiword path
}

TEST_CASE("euler_phi and moebius against brute force") {
    for (long long m = 1; m <= 200; ++m) {
        long long coprime = 0;
        for (long long k = 1; k <= m; ++k)
            if (std::gcd(k, m) == 1) ++coprime;
        REQUIRE(euler_phi(m) == coprime);

        // Squarefree factor count, straight from the definition.
        long long v = m;
        int primes = 0;
        bool squarefree = true;
        for (long long p = 2; p <= v; ++p) {
            if (v % p == 0) {
                int mult = 0;
                while (v % p == 0) {
                    v /= p;
                    ++mult;
                }
                if (mult > 1) squarefree = false;
                ++primes;
            }
        }
        int expected = squarefree ? (primes % 2 == 0 ? 1 : -1) : 0;
        REQUIRE(moebius(m) == expected);
    }
    REQUIRE(euler_phi(6) == 2);
    REQUIRE(moebius(6) == 1);
    REQUIRE(moebius(4) == 0);
    REQUIRE_THROWS_AS(euler_phi(0), std::domain_error);
    REQUIRE_THROWS_AS(moebius(0), std::domain_error);
}

TEST_CASE("divisor sums") {
    for (long long n = 1; n <= 100; ++n) {
        long long phi_sum = 0, mu_sum = 0;
        for (long long d : divisors(n)) {
            phi_sum += euler_phi(d);
            mu_sum += moebius(d);
        }
        REQUIRE(phi_sum == n);
        REQUIRE(mu_sum == (n == 1 ? 1 : 0));
        const auto divs = divisors(n);
        REQUIRE(std::is_sorted(divs.begin(), divs.end()));
    }
}

TEST_CASE("chi_odd") {
    REQUIRE(chi_odd(5) == 1);
    REQUIRE(chi_odd(4) == 0);
}
