#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "kreweras/bigint.hpp"
#include "kreweras/bijections.hpp"
#include "kreweras/counting.hpp"
#include "kreweras/noncrossing.hpp"
#include "kreweras/numtheory.hpp"
#include "kreweras/plane_tree.hpp"

namespace kreweras {

// Histogram of complement-orbit lengths at a given n, with one canonical
// tree representative per orbit when requested.  Only positive counts are
// stored; entries are ordered by length descending, representatives
// ascending in Dyck order.
struct OrbitTable {
    struct Entry {
        int length = 0;
        BigInt count;
        std::vector<std::string> representatives;  // canonical Dyck words, may be empty
    };
    int n = 0;
    std::vector<Entry> entries;

    BigInt total_orbits() const {
        BigInt t = 0;
        for (const auto& e : entries) t += e.count;
        return t;
    }
    BigInt total_elements() const {
        BigInt t = 0;
        for (const auto& e : entries) t += e.count * e.length;
        return t;
    }
};

// Entrywise equality of length -> count, treating absent lengths as zero.
inline bool same_orbit_counts(const OrbitTable& a, const OrbitTable& b) {
    if (a.n != b.n) return false;
    std::map<int, BigInt> ca, cb;
    for (const auto& e : a.entries)
        if (e.count != 0) ca[e.length] = e.count;
    for (const auto& e : b.entries)
        if (e.count != 0) cb[e.length] = e.count;
    return ca == cb;
}

// The orbit of p under iterated complementation: p, k(p), k^2(p), ... up
// to but not including the first repeat.  Its size is the exact period.
inline std::vector<NoncrossingPartition> complement_orbit(const NoncrossingPartition& p) {
    std::vector<NoncrossingPartition> orbit = {p};
    for (NoncrossingPartition q = complement(p); !(q == p); q = complement(q)) orbit.push_back(q);
    return orbit;
}

// Full orbit decomposition, computed on the tree side: a tree is counted
// exactly when it is the least Dyck word of its reroot orbit.
inline OrbitTable orbit_table(int n, int cap = kDefaultEnumerationCap, bool with_representatives = true) {
    if (n > cap) throw resource_limit_error("orbit_table: n = " + std::to_string(n) + " exceeds cap");
    std::map<int, std::pair<long long, std::vector<std::string>>> found;
    for_each_dyck(n, [&](const std::string& w) {
        PlaneTree t = PlaneTree::from_dyck(w);
        auto orbit = reroot_orbit(t);
        bool least = true;
        for (const auto& u : orbit)
            if (u < t) {
                least = false;
                break;
            }
        if (!least) return;
        auto& slot = found[static_cast<int>(orbit.size())];
        slot.first += 1;
        if (with_representatives) slot.second.push_back(w);
    });
    OrbitTable table;
    table.n = n;
    for (auto it = found.rbegin(); it != found.rend(); ++it) {
        OrbitTable::Entry entry;
        entry.length = it->first;
        entry.count = it->second.first;
        entry.representatives = std::move(it->second.second);
        std::sort(entry.representatives.begin(), entry.representatives.end());
        table.entries.push_back(std::move(entry));
    }
    return table;
}

// Lengths an orbit can have: 2d for each divisor d of n, plus n itself
// when n is odd.
inline std::vector<int> allowed_lengths(int n) {
    if (n < 2) throw std::domain_error("allowed_lengths: n must be >= 2");
    std::vector<int> lengths;
    for (long long d : divisors(n)) lengths.push_back(static_cast<int>(2 * d));
    if (chi_odd(n)) lengths.push_back(n);
    std::sort(lengths.begin(), lengths.end());
    return lengths;
}

// Orbit counts by length from the closed forms alone: full-length orbits
// are the asymmetric planar trees, half-length ones split on the parity of
// n, and shorter even lengths 2d count asymmetric rooted planar trees with
// d edges.  Zero counts are omitted.
inline OrbitTable predicted_orbit_table(int n) {
    if (n < 2) throw std::domain_error("predicted_orbit_table: n must be >= 2");
    std::map<int, BigInt> counts;
    counts[2 * n] = asym_planar_count(n);
    if (n % 2 != 0)
        counts[n] = catalan((n - 1) / 2);
    for (long long d : divisors(n))
        if (d < n) counts[static_cast<int>(2 * d)] = asym_rooted_planar_count(static_cast<int>(d));
    OrbitTable table;
    table.n = n;
    for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
        if (it->second == 0) continue;
        OrbitTable::Entry entry;
        entry.length = it->first;
        entry.count = it->second;
        table.entries.push_back(std::move(entry));
    }
    return table;
}

}  // namespace kreweras
