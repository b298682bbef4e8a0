#include "kreweras/bijections.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "kreweras/numtheory.hpp"
#include "test_helpers.hpp"

using namespace kreweras;

namespace {

// Reference construction straight from the loop picture in the proof of
// the commutation theorem: the edge with odd index 2i-1 closes at even
// index 2*(next(i)-1), so the blocks are the cycles of i -> even/2 + 1.
NoncrossingPartition to_partition_by_loops(const PlaneTree& t) {
    const int n = t.n();
    std::vector<int> successor(static_cast<size_t>(n) + 1, 0);
    for (const auto& e : t.edges()) {
        const int element = (odd_index(e) + 1) / 2;
        successor[static_cast<size_t>(element)] = (even_index(e) / 2) % n + 1;
    }
    std::vector<std::vector<int>> blocks;
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<size_t>(i)]) continue;
        std::vector<int> cycle;
        for (int j = i; !seen[static_cast<size_t>(j)]; j = successor[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = true;
            cycle.push_back(j);
        }
        blocks.push_back(std::move(cycle));
    }
    return NoncrossingPartition::from_blocks(std::move(blocks), n);
}

}  // namespace

TEST_CASE("tree partition of the star trees") {
    for (int n = 1; n <= 8; ++n) {
        REQUIRE(to_partition(star_center(n)) == NoncrossingPartition::top(n));
        REQUIRE(to_partition(star_leaf(n)) == NoncrossingPartition::bottom(n));
        REQUIRE(to_partition_dual(star_center(n)) == NoncrossingPartition::bottom(n));
        REQUIRE(to_partition_dual(star_leaf(n)) == NoncrossingPartition::top(n));
    }
    REQUIRE(to_partition(PlaneTree::from_dyck("()")) == NoncrossingPartition::top(1));
}

TEST_CASE("tree partition matches the loop construction") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& t : enumerate_trees(n)) REQUIRE(to_partition(t) == to_partition_by_loops(t));
}

TEST_CASE("from_partition inverts to_partition") {
    for (int n = 1; n <= 7; ++n) {
        REQUIRE(from_partition(NoncrossingPartition::top(n)) == star_center(n));
        REQUIRE(from_partition(NoncrossingPartition::bottom(n)) == star_leaf(n));
        for (const auto& t : enumerate_trees(n)) REQUIRE(from_partition(to_partition(t)) == t);
        for (const auto& p : testutil::all_noncrossing_bruteforce(n))
            REQUIRE(to_partition(from_partition(p)) == p);
    }
}

TEST_CASE("rerooting commutes with complementation") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& t : enumerate_trees(n)) {
            const NoncrossingPartition p = to_partition(t);
            REQUIRE(to_partition(reroot(t)) == complement(p));
            REQUIRE(to_partition_dual(t) == complement(p));
        }
    }
}

TEST_CASE("both tree partitions are bijections") {
    for (int n = 1; n <= 7; ++n) {
        std::set<NoncrossingPartition> images, dual_images, complements;
        for (const auto& t : enumerate_trees(n)) {
            images.insert(to_partition(t));
            dual_images.insert(to_partition_dual(t));
            complements.insert(complement(to_partition(t)));
        }
        REQUIRE(BigInt(images.size()) == catalan(n));
        REQUIRE(BigInt(dual_images.size()) == catalan(n));
        REQUIRE(BigInt(complements.size()) == catalan(n));
    }
}

TEST_CASE("partition enumeration counts and order") {
    REQUIRE(enumerate_partitions(1).size() == 1);
    REQUIRE(enumerate_partitions(3).size() == 5);
    REQUIRE(enumerate_partitions(4).size() == 14);
    REQUIRE_THROWS_AS(enumerate_partitions(13), resource_limit_error);
    // Same census as the independent filter over all set partitions.
    for (int n = 1; n <= 6; ++n) {
        auto fast = enumerate_partitions(n);
        auto brute = testutil::all_noncrossing_bruteforce(n);
        REQUIRE(fast.size() == brute.size());
        std::set<NoncrossingPartition> a(fast.begin(), fast.end()), b(brute.begin(), brute.end());
        REQUIRE(a == b);
    }
}

TEST_CASE("meanders are lattice complements, but not conversely") {
    // Every meander pair is a complement pair; the converse first fails at
    // n = 4, where NC(4) has 46 ordered complement pairs and only 42 pairs
    // of matchings close into a single loop.
    for (int n = 1; n <= 4; ++n) {
        auto trees = enumerate_trees(n);
        long long meanders = 0, complements = 0;
        for (const auto& t : trees) {
            for (const auto& u : trees) {
                const bool m = is_meander(t, u);
                const bool c = is_complement(to_partition(t), to_partition(u));
                if (m) REQUIRE(c);
                meanders += m;
                complements += c;
            }
        }
        if (n < 4) REQUIRE(meanders == complements);
    }
    const PlaneTree t = PlaneTree::from_dyck("(((())))");
    const PlaneTree u = PlaneTree::from_dyck("(())(())");
    REQUIRE(is_complement(to_partition(t), to_partition(u)));
    REQUIRE_FALSE(is_meander(t, u));
}
