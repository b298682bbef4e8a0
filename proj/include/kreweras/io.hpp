#pragma once

#include <cctype>
#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "kreweras/counting.hpp"
#include "kreweras/csp.hpp"
#include "kreweras/noncrossing.hpp"
#include "kreweras/orbits.hpp"
#include "kreweras/plane_tree.hpp"
#include "kreweras/polynomial.hpp"

namespace kreweras {

using Json = nlohmann::json;

// ---------------------------------------------------------------- text ----

// "1,3/2" : blocks joined by '/', elements by ','.
inline std::string to_text(const NoncrossingPartition& p) {
    std::string s;
    for (size_t b = 0; b < p.blocks().size(); ++b) {
        if (b) s += '/';
        for (size_t k = 0; k < p.blocks()[b].size(); ++k) {
            if (k) s += ',';
            s += std::to_string(p.blocks()[b][k]);
        }
    }
    return s;
}

// Ordering is re-canonicalized; only invalid elements are rejected.
inline NoncrossingPartition parse_partition(const std::string& text) {
    std::vector<std::vector<int>> blocks(1);
    int value = -1, n = 0;
    auto flush_element = [&](char context) {
        if (value < 0) throw std::invalid_argument(std::string("partition text: missing element before '") + context + "'");
        blocks.back().push_back(value);
        n = std::max(n, value);
        value = -1;
    };
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            value = (value < 0 ? 0 : value * 10) + (c - '0');
        } else if (c == ',') {
            flush_element(',');
        } else if (c == '/') {
            flush_element('/');
            blocks.emplace_back();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw std::invalid_argument(std::string("partition text: unexpected character '") + c + "'");
        }
    }
    flush_element(' ');
    return NoncrossingPartition::from_blocks(std::move(blocks), n);
}

inline std::string to_text(const PlaneTree& t) { return t.dyck(); }

inline PlaneTree parse_tree(const std::string& text) { return PlaneTree::from_dyck(text); }

// "1 + q^2 + 2q^4" with ascending exponents; q^1 prints as plain q.
inline std::string to_text(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    const auto& coeffs = p.coefficients();
    bool first = true;
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k] == 0) continue;
        const bool negative = coeffs[k] < 0;
        const BigInt magnitude = negative ? BigInt(-coeffs[k]) : coeffs[k];
        if (first) {
            if (negative) s += '-';
            first = false;
        } else {
            s += negative ? " - " : " + ";
        }
        if (k == 0 || magnitude != 1) s += magnitude.str();
        if (k >= 1) {
            s += 'q';
            if (k >= 2) s += '^' + std::to_string(k);
        }
    }
    return s;
}

inline IntPolynomial parse_polynomial(const std::string& text) {
    std::vector<BigInt> coeffs;
    size_t i = 0;
    const auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_space();
    bool any = false;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            if (text[i] == '-') sign = -1;
            ++i;
            skip_space();
        } else if (any) {
            throw std::invalid_argument("polynomial text: expected '+' or '-' between terms");
        }
        std::string digits;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
        skip_space();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip_space();
        }
        BigInt coeff = digits.empty() ? BigInt(1) : BigInt(digits);
        int exponent = 0;
        if (i < text.size() && text[i] == 'q') {
            ++i;
            exponent = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::string exp_digits;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) exp_digits += text[i++];
                if (exp_digits.empty()) throw std::invalid_argument("polynomial text: missing exponent after '^'");
                exponent = std::stoi(exp_digits);
            }
        } else if (digits.empty()) {
            throw std::invalid_argument("polynomial text: empty term");
        }
        if (exponent >= static_cast<int>(coeffs.size())) coeffs.resize(static_cast<size_t>(exponent) + 1);
        coeffs[static_cast<size_t>(exponent)] += sign * coeff;
        skip_space();
        any = true;
    }
    if (!any) throw std::invalid_argument("polynomial text: empty input");
    return IntPolynomial(std::move(coeffs));
}

// ---------------------------------------------------------------- json ----

// Counts stay JSON numbers while they fit; beyond that, decimal strings.
inline Json to_json(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

inline Json to_json(const NoncrossingPartition& p) {
    Json blocks = Json::array();
    for (const auto& b : p.blocks()) blocks.push_back(b);
    return Json{{"n", p.n()}, {"blocks", blocks}};
}

inline NoncrossingPartition partition_from_json(const Json& j) {
    std::vector<std::vector<int>> blocks;
    for (const auto& b : j.at("blocks")) blocks.push_back(b.get<std::vector<int>>());
    return NoncrossingPartition::from_blocks(std::move(blocks), j.at("n").get<int>());
}

inline Json edges_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const auto& [a, b] : edges) out.push_back(Json::array({a, b}));
    return out;
}

inline Json to_json(const PlaneTree& t) { return Json{{"n", t.n()}, {"edges", edges_json(t.edges())}}; }

inline Json to_json(const Matching& m) { return Json{{"n", m.n()}, {"edges", edges_json(m.chords())}}; }

inline std::vector<Edge> edges_from_json(const Json& j) {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edges: expected pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return edges;
}

inline PlaneTree tree_from_json(const Json& j) {
    PlaneTree t = PlaneTree::from_edges(edges_from_json(j));
    if (j.contains("n") && j.at("n").get<int>() != t.n())
        throw std::invalid_argument("tree: n does not match the edge count");
    return t;
}

inline Matching matching_from_json(const Json& j) {
    Matching m = Matching::from_chords(edges_from_json(j));
    if (j.contains("n") && j.at("n").get<int>() != m.n())
        throw std::invalid_argument("matching: n does not match the chord count");
    return m;
}

inline Json to_json(const IntPolynomial& p) {
    Json coeffs = Json::array();
    for (const BigInt& c : p.coefficients()) coeffs.push_back(to_json(c));
    return coeffs;
}

inline IntPolynomial polynomial_from_json(const Json& j) {
    std::vector<BigInt> coeffs;
    for (const auto& c : j) {
        if (c.is_string())
            coeffs.emplace_back(c.get<std::string>());
        else
            coeffs.emplace_back(c.get<std::int64_t>());
    }
    return IntPolynomial(std::move(coeffs));
}

inline Json to_json(const OrbitTable& t, bool include_representatives = false) {
    Json orbits = Json::array();
    for (const auto& e : t.entries) {
        Json entry{{"length", e.length}, {"count", to_json(e.count)}};
        if (include_representatives && !e.representatives.empty()) entry["representatives"] = e.representatives;
        orbits.push_back(std::move(entry));
    }
    return Json{{"n", t.n}, {"orbits", orbits}};
}

inline Json to_json(const CountReport& r) {
    return Json{{"n", r.n},
                {"catalan", to_json(r.catalan_count)},
                {"rootPT", to_json(r.rooted_planar)},
                {"asymRootPT", to_json(r.asym_rooted_planar)},
                {"PT", to_json(r.planar)},
                {"asymPT", to_json(r.asym_planar)}};
}

inline Json to_json(const CspReport& r) {
    Json condition1 = Json::array();
    for (const auto& c : r.condition1)
        condition1.push_back(Json{{"d", c.d},
                                  {"rotation", c.rotation},
                                  {"fixedPoints", to_json(c.fixed_points)},
                                  {"divisible", c.divisible}});
    Json condition2 = Json::array();
    for (const auto& c : r.condition2)
        condition2.push_back(Json{{"exponent", c.exponent},
                                  {"residue", to_json(c.residue)},
                                  {"orbitsCounted", to_json(c.orbits_counted)},
                                  {"match", c.match}});
    return Json{{"n", r.n},
                {"condition1", condition1},
                {"condition2", condition2},
                {"gcdInvariance", r.gcd_invariance},
                {"condition1Pass", r.condition1_pass},
                {"condition2Pass", r.condition2_pass},
                {"pass", r.pass}};
}

}  // namespace kreweras
