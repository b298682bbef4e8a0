#pragma once

#include <numeric>
#include <vector>

#include "kreweras/orbits.hpp"
#include "kreweras/qanalog.hpp"

namespace kreweras {

// Number of noncrossing perfect matchings on 2n labeled circle points
// fixed by rotating the labels c positions (the rerooting direction).
inline BigInt fixed_point_count(int n, int c, int cap = kDefaultEnumerationCap) {
    if (c < 0 || c >= 2 * n) throw std::domain_error("fixed_point_count: need 0 <= c < 2n");
    if (n > cap) throw resource_limit_error("fixed_point_count: n exceeds cap");
    long long fixed = 0;
    for_each_dyck(n, [&](const std::string& w) {
        PlaneTree t = PlaneTree::from_dyck(w);
        if (reroot_pow(t, c) == t) ++fixed;
    });
    return BigInt(fixed);
}

// Verdict for the two sieving conditions of the rotation action on chord
// diagrams, with X(q) the q-Catalan number and the group of order 2n.
//
// Condition 1 is checked exactly: for each divisor d of 2n, the value of
// X at every primitive d-th root of unity equals the fixed-point count of
// the rotation of order d iff the d-th cyclotomic polynomial divides
// X(q) - count.  Condition 2 folds X modulo q^2n - 1 and compares each
// residue with the number of orbits whose stabilizer order divides the
// exponent.
struct CspReport {
    struct RootOfUnityCheck {
        int d = 0;               // order of the root of unity
        int rotation = 0;        // representative c = 2n/d
        BigInt fixed_points;     // matchings fixed by that rotation
        bool divisible = false;  // cyclotomic(d) divides X - fixed_points
    };
    struct ResidueCheck {
        int exponent = 0;
        BigInt residue;         // coefficient of q^l in X mod q^2n - 1
        BigInt orbits_counted;  // orbits with stabilizer order dividing l
        bool match = false;
    };

    int n = 0;
    std::vector<RootOfUnityCheck> condition1;
    std::vector<ResidueCheck> condition2;
    bool gcd_invariance = false;  // fixed-point counts depend only on gcd(c,2n)
    bool condition1_pass = false;
    bool condition2_pass = false;
    bool pass = false;
};

inline CspReport csp_verify(int n, int cap = kDefaultEnumerationCap) {
    if (n < 1) throw std::domain_error("csp_verify: n must be >= 1");
    if (n > cap) throw resource_limit_error("csp_verify: n exceeds cap");
    CspReport report;
    report.n = n;
    const int order = 2 * n;
    const IntPolynomial x = q_catalan(n);

    std::vector<BigInt> fixed_by(static_cast<size_t>(order));
    for (int c = 0; c < order; ++c) fixed_by[static_cast<size_t>(c)] = fixed_point_count(n, c, cap);

    report.gcd_invariance = true;
    for (int c = 1; c < order; ++c)
        if (fixed_by[static_cast<size_t>(c)] != fixed_by[static_cast<size_t>(std::gcd(c, order))])
            report.gcd_invariance = false;

    report.condition1_pass = report.gcd_invariance;
    for (long long d : divisors(order)) {
        CspReport::RootOfUnityCheck check;
        check.d = static_cast<int>(d);
        check.rotation = static_cast<int>(order / d) % order;  // order of that rotation is d
        check.fixed_points = fixed_by[static_cast<size_t>(check.rotation)];
        check.divisible = divides(cyclotomic(check.d), x - IntPolynomial::constant(check.fixed_points));
        report.condition1_pass = report.condition1_pass && check.divisible;
        report.condition1.push_back(std::move(check));
    }

    const OrbitTable orbits = orbit_table(n, cap, /*with_representatives=*/false);
    const std::vector<BigInt> residues = mod_cyclic(x, order);
    report.condition2_pass = true;
    for (int l = 0; l < order; ++l) {
        CspReport::ResidueCheck check;
        check.exponent = l;
        check.residue = residues[static_cast<size_t>(l)];
        check.orbits_counted = 0;
        for (const auto& entry : orbits.entries) {
            const int stabilizer = order / entry.length;
            if (l % stabilizer == 0) check.orbits_counted += entry.count;
        }
        check.match = check.residue == check.orbits_counted;
        report.condition2_pass = report.condition2_pass && check.match;
        report.condition2.push_back(std::move(check));
    }

    report.pass = report.condition1_pass && report.condition2_pass;
    return report;
}

}  // namespace kreweras
