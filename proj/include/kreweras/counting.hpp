#pragma once

#include <set>
#include <string>
#include <vector>

#include "kreweras/bigint.hpp"
#include "kreweras/errors.hpp"
#include "kreweras/numtheory.hpp"
#include "kreweras/plane_tree.hpp"

namespace kreweras {

// The four exact counts for a given number of edges: plane trees up to
// nothing (catalan), up to cyclic reordering of the root's subtrees
// (rooted planar), up to rerooting (planar), and the asymmetric versions.
struct CountReport {
    int n = 0;
    BigInt catalan_count;
    BigInt rooted_planar;
    BigInt asym_rooted_planar;
    BigInt planar;
    BigInt asym_planar;
};

namespace detail {

inline BigInt exact_half(BigInt v, const char* what) {
    if (v % 2 != 0) throw internal_inconsistency_error(std::string(what) + ": expected an even value");
    return v / 2;
}

// (1/2n) sum over d | n of w(n/d) * binom(2d,d), with w one of the two
// multiplicative weights.  The division must be exact.
template <typename Weight>
BigInt rooted_planar_sum(int n, Weight&& weight, const char* what) {
    if (n < 1) throw std::domain_error(std::string(what) + ": n must be >= 1");
    BigInt sum = 0;
    for (long long d : divisors(n)) sum += BigInt(weight(n / d)) * binomial(2 * d, d);
    if (sum % (2 * n) != 0) throw internal_inconsistency_error(std::string(what) + ": inexact division");
    return sum / (2 * n);
}

}  // namespace detail

inline BigInt rooted_planar_count(int n) {
    return detail::rooted_planar_sum(n, [](long long m) { return euler_phi(m); }, "rooted_planar_count");
}

inline BigInt asym_rooted_planar_count(int n) {
    return detail::rooted_planar_sum(n, [](long long m) { return moebius(m); }, "asym_rooted_planar_count");
}

inline BigInt planar_count(int n) {
    if (n < 1) throw std::domain_error("planar_count: n must be >= 1");
    BigInt v = 2 * rooted_planar_count(n) - catalan(n);
    if (chi_odd(n)) v += catalan((n - 1) / 2);
    return detail::exact_half(std::move(v), "planar_count");
}

inline BigInt asym_planar_count(int n) {
    if (n < 1) throw std::domain_error("asym_planar_count: n must be >= 1");
    BigInt v = 2 * asym_rooted_planar_count(n) - catalan(n);
    if (chi_odd(n)) v -= catalan((n - 1) / 2);
    return detail::exact_half(std::move(v), "asym_planar_count");
}

inline CountReport count_report(int n) {
    CountReport r;
    r.n = n;
    r.catalan_count = catalan(n);
    r.rooted_planar = rooted_planar_count(n);
    r.asym_rooted_planar = asym_rooted_planar_count(n);
    r.planar = planar_count(n);
    r.asym_planar = asym_planar_count(n);
    return r;
}

// Distinct iterates of the rerooting map, starting at t.
inline std::vector<PlaneTree> reroot_orbit(const PlaneTree& t) {
    std::vector<PlaneTree> orbit = {t};
    for (PlaneTree u = reroot(t); !(u == t); u = reroot(u)) orbit.push_back(u);
    return orbit;
}

// Lexicographically least Dyck word in the reroot orbit; constant on
// orbits, so it identifies the underlying planar tree.
inline PlaneTree canonical_planar(const PlaneTree& t) {
    PlaneTree best = t;
    for (PlaneTree u = reroot(t); !(u == t); u = reroot(u))
        if (u < best) best = u;
    return best;
}

// Order of the rotational symmetry group of the underlying planar tree.
inline int symmetry_order(const PlaneTree& t) {
    return 2 * t.n() / static_cast<int>(reroot_orbit(t).size());
}

namespace detail {

// Top-level balanced factors of a Dyck word: the root's subtrees.
inline std::vector<std::string> root_factors(const std::string& word) {
    std::vector<std::string> factors;
    int depth = 0;
    size_t start = 0;
    for (size_t i = 0; i < word.size(); ++i) {
        depth += word[i] == '(' ? 1 : -1;
        if (depth == 0) {
            factors.push_back(word.substr(start, i + 1 - start));
            start = i + 1;
        }
    }
    return factors;
}

// Canonical key for a plane tree up to cyclic rotation of the root's
// subtree sequence: the least concatenation over all rotations.  Balanced
// factorizations decode uniquely, so equal keys mean equal rotation
// classes.
inline std::string min_rotation_key(const std::vector<std::string>& factors) {
    std::string best;
    for (size_t r = 0; r < factors.size(); ++r) {
        std::string candidate;
        for (size_t k = 0; k < factors.size(); ++k) candidate += factors[(r + k) % factors.size()];
        if (r == 0 || candidate < best) best = std::move(candidate);
    }
    return best;
}

inline bool aperiodic(const std::vector<std::string>& factors) {
    const size_t k = factors.size();
    for (size_t p = 1; p < k; ++p) {
        if (k % p != 0) continue;
        bool periodic = true;
        for (size_t i = 0; i < k && periodic; ++i) periodic = factors[i] == factors[(i + p) % k];
        if (periodic) return false;
    }
    return true;
}

}  // namespace detail

inline BigInt rooted_planar_count_bruteforce(int n, int cap = kDefaultEnumerationCap) {
    std::set<std::string> keys;
    if (n > cap) throw resource_limit_error("rooted_planar_count_bruteforce: cap exceeded");
    for_each_dyck(n, [&](const std::string& w) { keys.insert(detail::min_rotation_key(detail::root_factors(w))); });
    return BigInt(keys.size());
}

inline BigInt asym_rooted_planar_count_bruteforce(int n, int cap = kDefaultEnumerationCap) {
    if (n > cap) throw resource_limit_error("asym_rooted_planar_count_bruteforce: cap exceeded");
    std::set<std::string> keys;
    for_each_dyck(n, [&](const std::string& w) {
        auto factors = detail::root_factors(w);
        if (detail::aperiodic(factors)) keys.insert(detail::min_rotation_key(factors));
    });
    return BigInt(keys.size());
}

inline BigInt planar_count_bruteforce(int n, int cap = kDefaultEnumerationCap) {
    if (n > cap) throw resource_limit_error("planar_count_bruteforce: cap exceeded");
    long long orbits = 0;
    for_each_dyck(n, [&](const std::string& w) {
        PlaneTree t = PlaneTree::from_dyck(w);
        if (canonical_planar(t) == t) ++orbits;
    });
    return BigInt(orbits);
}

inline BigInt asym_planar_count_bruteforce(int n, int cap = kDefaultEnumerationCap) {
    if (n > cap) throw resource_limit_error("asym_planar_count_bruteforce: cap exceeded");
    long long orbits = 0;
    for_each_dyck(n, [&](const std::string& w) {
        PlaneTree t = PlaneTree::from_dyck(w);
        if (canonical_planar(t) == t && static_cast<int>(reroot_orbit(t).size()) == 2 * n) ++orbits;
    });
    return BigInt(orbits);
}

}  // namespace kreweras
