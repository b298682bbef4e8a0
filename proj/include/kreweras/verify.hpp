#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "kreweras/bijections.hpp"
#include "kreweras/counting.hpp"
#include "kreweras/csp.hpp"
#include "kreweras/io.hpp"
#include "kreweras/orbits.hpp"

namespace kreweras {

// Exhaustive invariant harness.  Each family is checked over the
// intersection of the requested range with its own documented range; the
// first counterexample stops that family and is reported in text form.

struct VerifyOptions {
    int min_n = 1;
    int max_n = 8;
    int enumeration_cap = kDefaultEnumerationCap;
    // Self-test hook: mis-evaluate the complement of the bottom element so
    // the harness demonstrably catches a planted fault.
    bool corrupt_complement = false;
};

struct FamilyResult {
    std::string name;
    long long checks = 0;
    bool pass = true;
    std::string counterexample;
};

struct VerifyReport {
    int min_n = 0;
    int max_n = 0;
    std::vector<FamilyResult> families;
    long long total_checks = 0;
    bool pass = true;
};

inline VerifyReport run_verification(const VerifyOptions& opt = {}) {
    VerifyReport report;
    report.min_n = opt.min_n;
    report.max_n = opt.max_n;

    auto kappa = [&](const NoncrossingPartition& p) {
        if (opt.corrupt_complement && p.n() >= 2 && p == NoncrossingPartition::bottom(p.n()))
            return NoncrossingPartition::bottom(p.n());
        return complement(p);
    };
    auto kappa_orbit = [&](NoncrossingPartition p) {
        std::vector<NoncrossingPartition> orbit = {p};
        for (NoncrossingPartition q = kappa(p); !(q == p); q = kappa(q)) orbit.push_back(q);
        return orbit;
    };

    auto fail = [](FamilyResult& fam, const std::string& detail) {
        fam.pass = false;
        if (fam.counterexample.empty()) fam.counterexample = detail;
    };
    auto run_family = [&](const std::string& name, int lo, int hi, auto&& body) {
        FamilyResult fam;
        fam.name = name;
        for (int n = std::max(lo, opt.min_n); n <= std::min(hi, opt.max_n) && fam.pass; ++n) body(n, fam);
        report.total_checks += fam.checks;
        report.pass = report.pass && fam.pass;
        report.families.push_back(std::move(fam));
    };

    run_family("complement is a lattice complement", 1, 8, [&](int n, FamilyResult& fam) {
        for (const auto& p : enumerate_partitions(n, opt.enumeration_cap)) {
            ++fam.checks;
            if (!is_complement(p, kappa(p))) {
                fail(fam, "n=" + std::to_string(n) + " partition " + to_text(p));
                return;
            }
        }
    });

    run_family("complement period divides 2n and squares to rotation", 1, 8, [&](int n, FamilyResult& fam) {
        for (const auto& p : enumerate_partitions(n, opt.enumeration_cap)) {
            ++fam.checks;
            const auto orbit = kappa_orbit(p);
            const bool period_ok = (2 * n) % static_cast<int>(orbit.size()) == 0;
            if (!period_ok || !(kappa(kappa(p)) == rotate(p, 1))) {
                fail(fam, "n=" + std::to_string(n) + " partition " + to_text(p));
                return;
            }
        }
    });

    run_family("complement is a bijection", 1, 8, [&](int n, FamilyResult& fam) {
        std::set<NoncrossingPartition> images;
        for (const auto& p : enumerate_partitions(n, opt.enumeration_cap)) images.insert(kappa(p));
        ++fam.checks;
        if (BigInt(images.size()) != catalan(n)) fail(fam, "n=" + std::to_string(n) + " image not full size");
    });

    run_family("complement reverses refinement", 1, 6, [&](int n, FamilyResult& fam) {
        const auto all = enumerate_partitions(n, opt.enumeration_cap);
        for (const auto& p : all) {
            for (const auto& q : all) {
                ++fam.checks;
                if (refines(p, q) != refines(kappa(q), kappa(p))) {
                    fail(fam, "n=" + std::to_string(n) + " pair " + to_text(p) + " vs " + to_text(q));
                    return;
                }
            }
        }
    });

    run_family("complement is an involution exactly up to n = 2", 1, 6, [&](int n, FamilyResult& fam) {
        bool moved = false;
        for (const auto& p : enumerate_partitions(n, opt.enumeration_cap)) {
            ++fam.checks;
            const bool fixed = kappa(kappa(p)) == p;
            if (n <= 2 && !fixed) {
                fail(fam, "n=" + std::to_string(n) + " partition " + to_text(p));
                return;
            }
            moved = moved || !fixed;
        }
        if (n >= 3 && !moved) fail(fam, "n=" + std::to_string(n) + " squared map is the identity");
    });

    run_family("rerooting commutes with complementation", 1, 8, [&](int n, FamilyResult& fam) {
        for (const auto& t : enumerate_trees(n, opt.enumeration_cap)) {
            ++fam.checks;
            const NoncrossingPartition expected = kappa(to_partition(t));
            if (!(to_partition(reroot(t)) == expected) || !(to_partition_dual(t) == expected)) {
                fail(fam, "n=" + std::to_string(n) + " tree " + t.dyck());
                return;
            }
        }
    });

    run_family("a tree and its rerooting form a meander", 1, 8, [&](int n, FamilyResult& fam) {
        for (const auto& t : enumerate_trees(n, opt.enumeration_cap)) {
            ++fam.checks;
            if (!is_meander(t, reroot(t))) {
                fail(fam, "n=" + std::to_string(n) + " tree " + t.dyck());
                return;
            }
        }
    });

    run_family("meander pairs are complement pairs", 1, 5, [&](int n, FamilyResult& fam) {
        const auto trees = enumerate_trees(n, opt.enumeration_cap);
        for (const auto& t : trees) {
            for (const auto& u : trees) {
                ++fam.checks;
                if (is_meander(t, u) && !is_complement(to_partition(t), to_partition(u))) {
                    fail(fam, "n=" + std::to_string(n) + " trees " + t.dyck() + " and " + u.dyck());
                    return;
                }
            }
        }
    });

    run_family("tree partitions are bijections with exact inverses", 1, 8, [&](int n, FamilyResult& fam) {
        std::set<NoncrossingPartition> images, dual_images;
        for (const auto& t : enumerate_trees(n, opt.enumeration_cap)) {
            ++fam.checks;
            images.insert(to_partition(t));
            dual_images.insert(to_partition_dual(t));
            if (!(from_partition(to_partition(t)) == t) || !(reroot_inverse(reroot(t)) == t)) {
                fail(fam, "n=" + std::to_string(n) + " tree " + t.dyck());
                return;
            }
        }
        ++fam.checks;
        if (BigInt(images.size()) != catalan(n) || BigInt(dual_images.size()) != catalan(n))
            fail(fam, "n=" + std::to_string(n) + " images not full size");
    });

    run_family("edge parity structure", 1, 8, [&](int n, FamilyResult& fam) {
        for (const auto& t : enumerate_trees(n, opt.enumeration_cap)) {
            ++fam.checks;
            const TreeStructure s = tree_structure(t);
            for (int e = 0; e < n; ++e) {
                const Edge& edge = t.edges()[static_cast<size_t>(e)];
                const int parent = s.parent_edge[static_cast<size_t>(e)];
                const bool one_odd = (edge.first + edge.second) % 2 == 1;
                const bool root_ok = parent != -1 || is_odd_edge(edge);
                const bool alternates =
                    parent == -1 || is_odd_edge(edge) != is_odd_edge(t.edges()[static_cast<size_t>(parent)]);
                if (!one_odd || !root_ok || !alternates) {
                    fail(fam, "n=" + std::to_string(n) + " tree " + t.dyck());
                    return;
                }
            }
        }
    });

    run_family("orbit counts match the closed-form prediction", 2, 10, [&](int n, FamilyResult& fam) {
        const OrbitTable table = orbit_table(n, opt.enumeration_cap, false);
        fam.checks += 3;
        if (!same_orbit_counts(table, predicted_orbit_table(n)))
            fail(fam, "n=" + std::to_string(n) + " table differs from prediction");
        else if (table.total_elements() != catalan(n))
            fail(fam, "n=" + std::to_string(n) + " orbit lengths do not sum to catalan");
        else if (table.total_orbits() != planar_count(n))
            fail(fam, "n=" + std::to_string(n) + " orbit total differs from the planar count");
    });

    run_family("orbit lengths are always allowed", 2, 10, [&](int n, FamilyResult& fam) {
        const auto allowed = allowed_lengths(n);
        for (const auto& entry : orbit_table(n, opt.enumeration_cap, false).entries) {
            ++fam.checks;
            if (std::find(allowed.begin(), allowed.end(), entry.length) == allowed.end()) {
                fail(fam, "n=" + std::to_string(n) + " length " + std::to_string(entry.length));
                return;
            }
        }
    });

    run_family("closed-form counts match brute force", 1, 10, [&](int n, FamilyResult& fam) {
        fam.checks += 4;
        if (rooted_planar_count(n) != rooted_planar_count_bruteforce(n, opt.enumeration_cap) ||
            asym_rooted_planar_count(n) != asym_rooted_planar_count_bruteforce(n, opt.enumeration_cap) ||
            planar_count(n) != planar_count_bruteforce(n, opt.enumeration_cap) ||
            asym_planar_count(n) != asym_planar_count_bruteforce(n, opt.enumeration_cap))
            fail(fam, "n=" + std::to_string(n));
    });

    {
        // Exactness of the closed-form divisions, independent of the range.
        FamilyResult fam;
        fam.name = "closed-form divisions are exact to n = 64";
        for (int n = 1; n <= 64 && fam.pass; ++n) {
            ++fam.checks;
            try {
                count_report(n);
            } catch (const internal_inconsistency_error&) {
                fail(fam, "n=" + std::to_string(n));
            }
        }
        report.total_checks += fam.checks;
        report.pass = report.pass && fam.pass;
        report.families.push_back(std::move(fam));
    }

    run_family("cyclic sieving holds with consistent residues", 1, 8, [&](int n, FamilyResult& fam) {
        const CspReport csp = csp_verify(n, opt.enumeration_cap);
        fam.checks += 3;
        if (!csp.pass || csp.condition1_pass != csp.condition2_pass)
            fail(fam, "n=" + std::to_string(n) + " sieving conditions disagree or fail");
        else if (csp.condition2[0].residue != planar_count(n))
            fail(fam, "n=" + std::to_string(n) + " residue 0 differs from the planar count");
        else if (n >= 2 && csp.condition2[1].residue != asym_planar_count(n))
            fail(fam, "n=" + std::to_string(n) + " residue 1 differs from the asymmetric count");
    });

    run_family("fixed points satisfy the orbit-count identity", 1, 8, [&](int n, FamilyResult& fam) {
        BigInt total = 0;
        for (int c = 0; c < 2 * n; ++c) total += fixed_point_count(n, c, opt.enumeration_cap);
        ++fam.checks;
        if (total != BigInt(2 * n) * orbit_table(n, opt.enumeration_cap, false).total_orbits())
            fail(fam, "n=" + std::to_string(n));
    });

    run_family("periods agree on both sides of the bijection", 1, 8, [&](int n, FamilyResult& fam) {
        for (const auto& p : enumerate_partitions(n, opt.enumeration_cap)) {
            ++fam.checks;
            if (kappa_orbit(p).size() != reroot_orbit(from_partition(p)).size()) {
                fail(fam, "n=" + std::to_string(n) + " partition " + to_text(p));
                return;
            }
        }
    });

    return report;
}

inline Json to_json(const VerifyReport& r) {
    Json families = Json::array();
    for (const auto& f : r.families) {
        Json fam{{"name", f.name}, {"checks", f.checks}, {"pass", f.pass}};
        if (!f.pass) fam["counterexample"] = f.counterexample;
        families.push_back(std::move(fam));
    }
    return Json{{"minN", r.min_n},
                {"maxN", r.max_n},
                {"families", families},
                {"totalChecks", r.total_checks},
                {"pass", r.pass}};
}

}  // namespace kreweras
