#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace kreweras {

// Set partition of [1,n] with the noncrossing invariant: no a < b < c < d
// with a,c in one block and b,d in another.  Canonical representation:
// ascending within blocks, blocks sorted by their minimum.  Immutable.
class NoncrossingPartition {
public:
    static NoncrossingPartition from_blocks(std::vector<std::vector<int>> blocks, int n);

    static NoncrossingPartition top(int n) {
        std::vector<int> all(static_cast<size_t>(n));
        std::iota(all.begin(), all.end(), 1);
        return from_blocks({std::move(all)}, n);
    }

    static NoncrossingPartition bottom(int n) {
        std::vector<std::vector<int>> blocks;
        blocks.reserve(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) blocks.push_back({i});
        return from_blocks(std::move(blocks), n);
    }

    int n() const { return n_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }

    // 0-based index into blocks() of the block containing element i.
    int block_index_of(int i) const { return block_of_[static_cast<size_t>(i)]; }
    const std::vector<int>& block_of(int i) const { return blocks_[static_cast<size_t>(block_of_[static_cast<size_t>(i)])]; }

    friend bool operator==(const NoncrossingPartition& a, const NoncrossingPartition& b) {
        return a.n_ == b.n_ && a.blocks_ == b.blocks_;
    }
    // Lexicographic on the canonical block lists; a deterministic total order.
    friend bool operator<(const NoncrossingPartition& a, const NoncrossingPartition& b) {
        if (a.n_ != b.n_) return a.n_ < b.n_;
        return a.blocks_ < b.blocks_;
    }

private:
    NoncrossingPartition(int n, std::vector<std::vector<int>> blocks, std::vector<int> block_of)
        : n_(n), blocks_(std::move(blocks)), block_of_(std::move(block_of)) {}

    int n_ = 0;
    std::vector<std::vector<int>> blocks_;
    std::vector<int> block_of_;  // element (1-based) -> block index
};

namespace detail {

// Validates that `blocks` is a set partition of [1,n]; fills element->block.
// Throws std::invalid_argument naming the offending element otherwise.
inline std::vector<int> index_partition(const std::vector<std::vector<int>>& blocks, int n) {
    if (n < 1) throw std::invalid_argument("partition: n must be >= 1");
    std::vector<int> block_of(static_cast<size_t>(n) + 1, -1);
    for (size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("partition: empty block");
        for (int e : blocks[b]) {
            if (e < 1 || e > n)
                throw std::invalid_argument("partition: element " + std::to_string(e) + " out of range [1," + std::to_string(n) + "]");
            if (block_of[static_cast<size_t>(e)] != -1)
                throw std::invalid_argument("partition: duplicate element " + std::to_string(e));
            block_of[static_cast<size_t>(e)] = static_cast<int>(b);
        }
    }
    for (int e = 1; e <= n; ++e)
        if (block_of[static_cast<size_t>(e)] == -1)
            throw std::invalid_argument("partition: missing element " + std::to_string(e));
    return block_of;
}

// Quadruple scan, used only to produce a diagnostic once a crossing is known.
inline std::string find_crossing_quadruple(const std::vector<int>& block_of, int n) {
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c)
                for (int d = c + 1; d <= n; ++d)
                    if (block_of[static_cast<size_t>(a)] == block_of[static_cast<size_t>(c)] &&
                        block_of[static_cast<size_t>(b)] == block_of[static_cast<size_t>(d)] &&
                        block_of[static_cast<size_t>(a)] != block_of[static_cast<size_t>(b)])
                        return "crossing quadruple (" + std::to_string(a) + "," + std::to_string(b) + "," +
                               std::to_string(c) + "," + std::to_string(d) + ")";
    return "crossing";
}

// One left-to-right pass with a stack of open blocks.  A partition is
// noncrossing iff at every element the innermost open block is its own.
inline bool noncrossing_scan(const std::vector<int>& block_of, int n) {
    std::vector<int> first(static_cast<size_t>(n) + 1, 0), last(static_cast<size_t>(n) + 1, 0);
    std::vector<int> first_of_block, last_of_block;
    for (int e = 1; e <= n; ++e) {
        int b = block_of[static_cast<size_t>(e)];
        if (b >= static_cast<int>(first_of_block.size())) {
            first_of_block.resize(static_cast<size_t>(b) + 1, 0);
            last_of_block.resize(static_cast<size_t>(b) + 1, 0);
        }
        if (first_of_block[static_cast<size_t>(b)] == 0) first_of_block[static_cast<size_t>(b)] = e;
        last_of_block[static_cast<size_t>(b)] = e;
    }
    std::vector<int> stack;
    for (int e = 1; e <= n; ++e) {
        int b = block_of[static_cast<size_t>(e)];
        if (first_of_block[static_cast<size_t>(b)] == e) stack.push_back(b);
        if (stack.empty() || stack.back() != b) return false;
        if (last_of_block[static_cast<size_t>(b)] == e) stack.pop_back();
    }
    return true;
}

}  // namespace detail

// True iff `blocks` (a set partition of [1,n], validated first) has no
// crossing quadruple.  Throws std::invalid_argument for a non-partition.
inline bool is_noncrossing(const std::vector<std::vector<int>>& blocks, int n) {
    auto block_of = detail::index_partition(blocks, n);
    return detail::noncrossing_scan(block_of, n);
}

inline NoncrossingPartition NoncrossingPartition::from_blocks(std::vector<std::vector<int>> blocks, int n) {
    auto block_of = detail::index_partition(blocks, n);
    if (!detail::noncrossing_scan(block_of, n))
        throw std::invalid_argument("partition is crossing: " + detail::find_crossing_quadruple(block_of, n));
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
    for (size_t b = 0; b < blocks.size(); ++b)
        for (int e : blocks[b]) block_of[static_cast<size_t>(e)] = static_cast<int>(b);
    return NoncrossingPartition(n, std::move(blocks), std::move(block_of));
}

// Kreweras complement.  Interleave a primed copy as 1 < 1' < 2 < 2' < ... <
// n < n'; the complement is the coarsest partition on the primed points
// whose union with the input stays noncrossing.  Computed by a linear scan
// that tracks the stack of open regions between the hulls of the input:
// passing element i closes the pocket opened at its block predecessor and
// opens one toward its block successor; the primed point right after i
// lands in whatever region is then innermost.
inline NoncrossingPartition complement(const NoncrossingPartition& p) {
    const int n = p.n();
    std::vector<int> region_of(static_cast<size_t>(n) + 1, 0);
    std::vector<int> open = {0};
    int regions = 1;
    for (int i = 1; i <= n; ++i) {
        const auto& block = p.block_of(i);
        if (i != block.front()) open.pop_back();
        if (i != block.back()) open.push_back(regions++);
        region_of[static_cast<size_t>(i)] = open.back();
    }
    std::vector<std::vector<int>> blocks(static_cast<size_t>(regions));
    for (int i = 1; i <= n; ++i) blocks[static_cast<size_t>(region_of[static_cast<size_t>(i)])].push_back(i);
    return NoncrossingPartition::from_blocks(std::move(blocks), n);
}

// Relabels every element j as j - shift (mod n, represented in [1,n]).
inline NoncrossingPartition rotate(const NoncrossingPartition& p, int shift) {
    const int n = p.n();
    auto relabel = [&](int j) {
        int r = (j - 1 - shift) % n;
        if (r < 0) r += n;
        return r + 1;
    };
    std::vector<std::vector<int>> blocks;
    blocks.reserve(p.blocks().size());
    for (const auto& b : p.blocks()) {
        std::vector<int> nb;
        nb.reserve(b.size());
        for (int j : b) nb.push_back(relabel(j));
        blocks.push_back(std::move(nb));
    }
    return NoncrossingPartition::from_blocks(std::move(blocks), n);
}

// Common refinement (lattice meet).  Noncrossing partitions are closed
// under meet, so no repair step is needed.
inline NoncrossingPartition meet(const NoncrossingPartition& p, const NoncrossingPartition& q) {
    if (p.n() != q.n()) throw std::invalid_argument("meet: mismatched n");
    const int n = p.n();
    const int qb = q.block_count();
    std::vector<std::vector<int>> cells(static_cast<size_t>(p.block_count()) * static_cast<size_t>(qb));
    for (int e = 1; e <= n; ++e)
        cells[static_cast<size_t>(p.block_index_of(e)) * static_cast<size_t>(qb) + static_cast<size_t>(q.block_index_of(e))].push_back(e);
    std::vector<std::vector<int>> blocks;
    for (auto& c : cells)
        if (!c.empty()) blocks.push_back(std::move(c));
    return NoncrossingPartition::from_blocks(std::move(blocks), n);
}

namespace detail {

// Two sorted element lists cross iff walking their union the block label
// alternates at least three times (pattern a..b..a..b).
inline bool blocks_cross(const std::vector<int>& a, const std::vector<int>& b) {
    size_t i = 0, j = 0;
    int runs = 0, current = 0;
    while (i < a.size() || j < b.size()) {
        int label;
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            label = 1;
            ++i;
        } else {
            label = 2;
            ++j;
        }
        if (label != current) {
            current = label;
            ++runs;
        }
    }
    return runs >= 4;
}

}  // namespace detail

// Smallest noncrossing partition coarser than both (lattice join): the
// partition-lattice join followed by noncrossing closure, merging crossing
// blocks until none remain.
inline NoncrossingPartition join(const NoncrossingPartition& p, const NoncrossingPartition& q) {
    if (p.n() != q.n()) throw std::invalid_argument("join: mismatched n");
    const int n = p.n();
    std::vector<int> parent(static_cast<size_t>(n) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int x, int y) { parent[static_cast<size_t>(find(x))] = find(y); };
    for (const auto& b : p.blocks())
        for (size_t k = 1; k < b.size(); ++k) unite(b[k - 1], b[k]);
    for (const auto& b : q.blocks())
        for (size_t k = 1; k < b.size(); ++k) unite(b[k - 1], b[k]);

    std::vector<std::vector<int>> blocks;
    {
        std::vector<int> slot(static_cast<size_t>(n) + 1, -1);
        for (int e = 1; e <= n; ++e) {
            int r = find(e);
            if (slot[static_cast<size_t>(r)] == -1) {
                slot[static_cast<size_t>(r)] = static_cast<int>(blocks.size());
                blocks.emplace_back();
            }
            blocks[static_cast<size_t>(slot[static_cast<size_t>(r)])].push_back(e);
        }
    }
    // Noncrossing closure.
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i < blocks.size() && !merged; ++i) {
            for (size_t j = i + 1; j < blocks.size() && !merged; ++j) {
                if (detail::blocks_cross(blocks[i], blocks[j])) {
                    std::vector<int> u;
                    std::merge(blocks[i].begin(), blocks[i].end(), blocks[j].begin(), blocks[j].end(),
                               std::back_inserter(u));
                    blocks[i] = std::move(u);
                    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(j));
                    merged = true;
                }
            }
        }
    }
    return NoncrossingPartition::from_blocks(std::move(blocks), n);
}

// True iff every block of p is contained in a block of q.
inline bool refines(const NoncrossingPartition& p, const NoncrossingPartition& q) {
    if (p.n() != q.n()) throw std::invalid_argument("refines: mismatched n");
    for (const auto& b : p.blocks()) {
        int target = q.block_index_of(b.front());
        for (int e : b)
            if (q.block_index_of(e) != target) return false;
    }
    return true;
}

// Lattice complement test: join is the top element and meet the bottom.
inline bool is_complement(const NoncrossingPartition& p, const NoncrossingPartition& q) {
    if (p.n() != q.n()) throw std::invalid_argument("is_complement: mismatched n");
    return join(p, q).block_count() == 1 && meet(p, q).block_count() == p.n();
}

}  // namespace kreweras
