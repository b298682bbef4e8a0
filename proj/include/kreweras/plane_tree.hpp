#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kreweras/errors.hpp"

namespace kreweras {

using Edge = std::pair<int, int>;  // boundary indices, left < right

// Perfect matching of [1,2n] as n chords on circle points labeled
// clockwise.  Crossings are allowed here; the meander check only needs the
// pairing.
class Matching {
public:
    static Matching from_chords(std::vector<Edge> chords) {
        if (chords.empty()) throw std::invalid_argument("matching: need at least one chord");
        const int n = static_cast<int>(chords.size());
        std::vector<int> partner(static_cast<size_t>(2 * n) + 1, 0);
        for (auto& [a, b] : chords) {
            if (a > b) std::swap(a, b);
            if (a < 1 || b > 2 * n || a == b)
                throw std::invalid_argument("matching: endpoint out of range [1," + std::to_string(2 * n) + "]");
            if (partner[static_cast<size_t>(a)] || partner[static_cast<size_t>(b)])
                throw std::invalid_argument("matching: endpoint used twice");
            partner[static_cast<size_t>(a)] = b;
            partner[static_cast<size_t>(b)] = a;
        }
        std::sort(chords.begin(), chords.end());
        return Matching(n, std::move(chords), std::move(partner));
    }

    int n() const { return n_; }
    const std::vector<Edge>& chords() const { return chords_; }
    int partner(int endpoint) const { return partner_[static_cast<size_t>(endpoint)]; }

    friend bool operator==(const Matching& a, const Matching& b) {
        return a.n_ == b.n_ && a.chords_ == b.chords_;
    }

private:
    Matching(int n, std::vector<Edge> chords, std::vector<int> partner)
        : n_(n), chords_(std::move(chords)), partner_(std::move(partner)) {}

    int n_;
    std::vector<Edge> chords_;
    std::vector<int> partner_;
};

// Plane tree with n edges and boundary indices [1,2n]: edge (i,j) carries
// its left and right boundary index, i < j.  Equivalently a balanced word
// over "()" with an open at every left index, or a noncrossing perfect
// matching.  Both views are stored; the word is canonical for ordering and
// serialization, the edge list for rerooting and meander work.
class PlaneTree {
public:
    static PlaneTree from_dyck(const std::string& word) {
        if (word.empty() || word.size() % 2 != 0)
            throw std::invalid_argument("dyck: length must be even and positive");
        std::vector<Edge> edges(word.size() / 2);
        std::vector<int> stack;
        int opened = 0;
        for (int pos = 1; pos <= static_cast<int>(word.size()); ++pos) {
            char c = word[static_cast<size_t>(pos - 1)];
            if (c == '(') {
                stack.push_back(opened++);
                edges[static_cast<size_t>(stack.back())].first = pos;
            } else if (c == ')') {
                if (stack.empty()) throw std::invalid_argument("dyck: unbalanced word");
                edges[static_cast<size_t>(stack.back())].second = pos;
                stack.pop_back();
            } else {
                throw std::invalid_argument("dyck: invalid character");
            }
        }
        if (!stack.empty()) throw std::invalid_argument("dyck: unbalanced word");
        return PlaneTree(static_cast<int>(word.size() / 2), std::move(edges), word);
    }

    static PlaneTree from_edges(std::vector<Edge> edges) {
        if (edges.empty()) throw std::invalid_argument("plane tree: need at least one edge");
        const int n = static_cast<int>(edges.size());
        std::vector<int> partner(static_cast<size_t>(2 * n) + 1, 0);
        std::vector<char> is_left(static_cast<size_t>(2 * n) + 1, 0);
        for (auto& [a, b] : edges) {
            if (a > b) std::swap(a, b);
            if (a < 1 || b > 2 * n || a == b)
                throw std::invalid_argument("plane tree: index out of range [1," + std::to_string(2 * n) + "]");
            if (partner[static_cast<size_t>(a)] || partner[static_cast<size_t>(b)])
                throw std::invalid_argument("plane tree: index used twice");
            partner[static_cast<size_t>(a)] = b;
            partner[static_cast<size_t>(b)] = a;
            is_left[static_cast<size_t>(a)] = 1;
        }
        std::string word(static_cast<size_t>(2 * n), ')');
        std::vector<int> stack;
        for (int pos = 1; pos <= 2 * n; ++pos) {
            if (is_left[static_cast<size_t>(pos)]) {
                word[static_cast<size_t>(pos - 1)] = '(';
                stack.push_back(pos);
            } else {
                if (stack.empty() || partner[static_cast<size_t>(pos)] != stack.back())
                    throw std::invalid_argument("plane tree: edges cross");
                stack.pop_back();
            }
        }
        std::sort(edges.begin(), edges.end());
        return PlaneTree(n, std::move(edges), std::move(word));
    }

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& dyck() const { return dyck_; }
    Matching matching() const { return Matching::from_chords(edges_); }

    friend bool operator==(const PlaneTree& a, const PlaneTree& b) { return a.dyck_ == b.dyck_; }
    // Lexicographic Dyck order ('(' < ')'), the library-wide ordering.
    friend bool operator<(const PlaneTree& a, const PlaneTree& b) { return a.dyck_ < b.dyck_; }

private:
    PlaneTree(int n, std::vector<Edge> edges, std::string dyck)
        : n_(n), edges_(std::move(edges)), dyck_(std::move(dyck)) {}

    int n_;
    std::vector<Edge> edges_;
    std::string dyck_;
};

// Star with n edges rooted at its center: every edge a child of the root.
inline PlaneTree star_center(int n) {
    if (n < 1) throw std::invalid_argument("star_center: n must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) edges.emplace_back(2 * i - 1, 2 * i);
    return PlaneTree::from_edges(std::move(edges));
}

// Star with n edges rooted at one of its leaves.
inline PlaneTree star_leaf(int n) {
    if (n < 1) throw std::invalid_argument("star_leaf: n must be >= 1");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n));
    edges.emplace_back(1, 2 * n);
    for (int i = 1; i <= n - 1; ++i) edges.emplace_back(2 * i, 2 * i + 1);
    return PlaneTree::from_edges(std::move(edges));
}

// Exactly one index of each edge is odd; the edge is odd iff its left one is.
inline bool is_odd_edge(const Edge& e) { return e.first % 2 != 0; }
inline int odd_index(const Edge& e) { return is_odd_edge(e) ? e.first : e.second; }
inline int even_index(const Edge& e) { return is_odd_edge(e) ? e.second : e.first; }

namespace detail {

// Rotates every boundary index by `shift` (positive = toward smaller
// indices, the rerooting direction), re-pairing and re-sorting.
inline PlaneTree rotate_boundary(const PlaneTree& t, int shift) {
    const int m = 2 * t.n();
    shift %= m;
    if (shift < 0) shift += m;
    auto move = [&](int idx) { return (idx - 1 - shift + m) % m + 1; };
    std::vector<Edge> edges;
    edges.reserve(t.edges().size());
    for (const auto& [a, b] : t.edges()) edges.emplace_back(move(a), move(b));
    return PlaneTree::from_edges(std::move(edges));
}

}  // namespace detail

// Rerooting map: shifts the boundary labeling one position, so (1,k)
// becomes (k-1,2n) and every other (i,j) becomes (i-1,j-1).  A bijection;
// 2n applications give back the original tree.
inline PlaneTree reroot(const PlaneTree& t) { return detail::rotate_boundary(t, 1); }

inline PlaneTree reroot_inverse(const PlaneTree& t) { return detail::rotate_boundary(t, -1); }

inline PlaneTree reroot_pow(const PlaneTree& t, int k) { return detail::rotate_boundary(t, k); }

// True iff the chords of `a` drawn above the line and those of `b` below
// close up into a single loop through all 2n endpoints.
inline bool is_meander(const Matching& a, const Matching& b) {
    if (a.n() != b.n()) throw std::invalid_argument("is_meander: mismatched n");
    int visited = 0;
    int x = 1;
    do {
        x = b.partner(a.partner(x));
        visited += 2;
    } while (x != 1);
    return visited == 2 * a.n();
}

inline bool is_meander(const PlaneTree& a, const PlaneTree& b) {
    return is_meander(a.matching(), b.matching());
}

// Calls fn(word) for every balanced word with n pairs, in lexicographic
// order with '(' < ')'.
template <typename Fn>
void for_each_dyck(int n, Fn&& fn) {
    if (n < 1) throw std::invalid_argument("for_each_dyck: n must be >= 1");
    std::string word;
    word.reserve(static_cast<size_t>(2 * n));
    auto step = [&](auto&& self, int open, int close) -> void {
        if (open == n && close == n) {
            fn(const_cast<const std::string&>(word));
            return;
        }
        if (open < n) {
            word.push_back('(');
            self(self, open + 1, close);
            word.pop_back();
        }
        if (close < open) {
            word.push_back(')');
            self(self, open, close + 1);
            word.pop_back();
        }
    };
    step(step, 0, 0);
}

inline constexpr int kDefaultEnumerationCap = 12;

// All C_n plane trees in lexicographic Dyck order.
inline std::vector<PlaneTree> enumerate_trees(int n, int cap = kDefaultEnumerationCap) {
    if (n > cap)
        throw resource_limit_error("enumerate_trees: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::vector<PlaneTree> trees;
    for_each_dyck(n, [&](const std::string& w) { trees.push_back(PlaneTree::from_dyck(w)); });
    return trees;
}

// Per-edge tree structure derived from the parenthesis nesting.  Vertex 0
// is the root; the vertex below edge e has id e+1.  Edge depth counts from
// 1 at the root, so an edge's boundary parity equals its depth parity.
struct TreeStructure {
    std::vector<int> parent_edge;   // -1 for edges incident to the root
    std::vector<int> depth;         // depth of each edge, root edges have 1
    std::vector<int> upper_vertex;  // vertex above each edge
};

inline TreeStructure tree_structure(const PlaneTree& t) {
    TreeStructure s;
    s.parent_edge.assign(static_cast<size_t>(t.n()), -1);
    s.depth.assign(static_cast<size_t>(t.n()), 0);
    s.upper_vertex.assign(static_cast<size_t>(t.n()), 0);
    std::vector<int> stack;  // open edge ids, edges are numbered by left index order
    int next_edge = 0;
    for (char c : t.dyck()) {
        if (c == '(') {
            int e = next_edge++;
            s.parent_edge[static_cast<size_t>(e)] = stack.empty() ? -1 : stack.back();
            s.depth[static_cast<size_t>(e)] = static_cast<int>(stack.size()) + 1;
            s.upper_vertex[static_cast<size_t>(e)] = stack.empty() ? 0 : stack.back() + 1;
            stack.push_back(e);
        } else {
            stack.pop_back();
        }
    }
    return s;
}

}  // namespace kreweras
