#pragma once

#include <numeric>
#include <vector>

#include "kreweras/noncrossing.hpp"
#include "kreweras/plane_tree.hpp"

namespace kreweras {

namespace detail {

struct EdgeDsu {
    std::vector<int> parent;
    explicit EdgeDsu(int n) : parent(static_cast<size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int x, int y) { parent[static_cast<size_t>(find(x))] = find(y); }
};

// Groups the edges of t around the chosen endpoint parity and projects
// each group's odd boundary indices down by 2i-1 -> i.  Every edge joins
// exactly one odd and one even vertex; grouping by the even side collects,
// at each vertex, its odd child edges together with its even parent edge
// (grouping by the odd side is the dual construction).
inline NoncrossingPartition tree_partition(const PlaneTree& t, bool group_by_even_vertex) {
    const int n = t.n();
    const TreeStructure s = tree_structure(t);
    EdgeDsu dsu(n);
    std::vector<int> seen_at_vertex(static_cast<size_t>(n) + 1, -1);  // vertex id -> first edge
    for (int e = 0; e < n; ++e) {
        const bool odd = is_odd_edge(t.edges()[static_cast<size_t>(e)]);
        const int vertex = (odd == group_by_even_vertex) ? s.upper_vertex[static_cast<size_t>(e)] : e + 1;
        int& first = seen_at_vertex[static_cast<size_t>(vertex)];
        if (first == -1)
            first = e;
        else
            dsu.unite(e, first);
    }
    std::vector<std::vector<int>> groups(static_cast<size_t>(n));
    for (int e = 0; e < n; ++e)
        groups[static_cast<size_t>(dsu.find(e))].push_back((odd_index(t.edges()[static_cast<size_t>(e)]) + 1) / 2);
    std::vector<std::vector<int>> blocks;
    for (auto& g : groups)
        if (!g.empty()) blocks.push_back(std::move(g));
    return NoncrossingPartition::from_blocks(std::move(blocks), n);
}

}  // namespace detail

// Bijection plane trees -> noncrossing partitions: odd children of a
// vertex grouped with their even parent edge.
inline NoncrossingPartition to_partition(const PlaneTree& t) {
    return detail::tree_partition(t, /*group_by_even_vertex=*/true);
}

// Dual bijection: even children grouped with their odd parent edge.
// Coincides with the Kreweras complement of to_partition.
inline NoncrossingPartition to_partition_dual(const PlaneTree& t) {
    return detail::tree_partition(t, /*group_by_even_vertex=*/false);
}

// Inverse of to_partition.  The tree is read off the interleaved hull
// diagram of p and its complement: the edge carrying odd index 2i-1 closes
// at the even index just before the successor of i within its block, so
// its right companion is 2*(next(i)-1), taken as 2n when that is 0.
inline PlaneTree from_partition(const NoncrossingPartition& p) {
    const int n = p.n();
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n));
    for (const auto& block : p.blocks()) {
        for (size_t k = 0; k < block.size(); ++k) {
            const int i = block[k];
            const int next = block[(k + 1) % block.size()];
            const int even = (next == 1) ? 2 * n : 2 * (next - 1);
            edges.emplace_back(std::min(2 * i - 1, even), std::max(2 * i - 1, even));
        }
    }
    return PlaneTree::from_edges(std::move(edges));
}

// All C_n noncrossing partitions of [1,n]: the image of the plane-tree
// enumeration under to_partition, which fixes the library-wide order.
inline std::vector<NoncrossingPartition> enumerate_partitions(int n, int cap = kDefaultEnumerationCap) {
    if (n > cap)
        throw resource_limit_error("enumerate_partitions: n = " + std::to_string(n) + " exceeds cap " +
                                   std::to_string(cap));
    std::vector<NoncrossingPartition> out;
    for_each_dyck(n, [&](const std::string& w) { out.push_back(to_partition(PlaneTree::from_dyck(w))); });
    return out;
}

}  // namespace kreweras
