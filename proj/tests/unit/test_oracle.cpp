#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "fewleaf/families.hpp"
#include "fewleaf/oracle.hpp"
#include "fewleaf/structural.hpp"

#include "helpers.hpp"

using namespace fewleaf;

namespace {

long long count_trees(const Graph& g) {
    return enumerate_spanning_trees(g, [](std::span<const Edge>) { return true; });
}

}  // namespace

TEST_CASE("enumeration counts on closed forms") {
    CHECK(count_trees(testutil::complete_graph(3)) == 3);
    CHECK(count_trees(testutil::complete_graph(4)) == 16);    // Cayley 4^2
    CHECK(count_trees(classic_graph(ClassicKind::Cycle, 5)) == 5);
    CHECK(count_trees(classic_graph(ClassicKind::Path, 6)) == 1);
}

TEST_CASE("enumeration rejects disconnected inputs") {
    Graph g = Graph::build(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(count_trees(g), DisconnectedError);
}

TEST_CASE("enumeration honors the cap") {
    CHECK_THROWS_AS(enumerate_spanning_trees(
                        testutil::complete_graph(6),
                        [](std::span<const Edge>) { return true; }, 100),
                    EnumerationCapError);
}

TEST_CASE("enumeration visits each edge set once and matches brute force") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        Graph g = testutil::random_connected_graph(n, 50, rng);
        auto brute = testutil::brute_spanning_trees(g);
        std::set<std::vector<Edge>> seen;
        enumerate_spanning_trees(g, [&](std::span<const Edge> edges) {
            std::vector<Edge> key(edges.begin(), edges.end());
            std::sort(key.begin(), key.end());
            CHECK(seen.insert(key).second);
            return true;
        });
        CHECK(seen.size() == brute.size());
        for (auto tree : brute) {
            std::sort(tree.begin(), tree.end());
            CHECK(seen.count(tree) == 1);
        }
    }
}

TEST_CASE("min_score basics") {
    CHECK(min_score(testutil::complete_graph(4)).min_score == 2);
    CHECK(min_score(classic_graph(ClassicKind::Cycle, 6)).min_score == 2);

    Graph g1 = sharpness_graph(1);
    OracleResult sharp1 = min_score(g1);
    CHECK(sharp1.min_score == 6);
    CHECK_FALSE(sharp1.feasible_le5);
    CHECK(sharp1.trees_enumerated == 1);   // the graph is its own tree

    Graph g2 = sharpness_graph(2);
    OracleResult sharp2 = min_score(g2);
    CHECK(sharp2.min_score == 6);
    CHECK(metrics(sharp2.witness).score == 6);
    CHECK(sharp2.witness.spanning());
}

TEST_CASE("min_score equals the brute-force minimum") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        Graph g = testutil::random_connected_graph(n, 55, rng);
        auto brute = testutil::brute_spanning_trees(g);
        int best = 1 << 20;
        for (const auto& tree : brute) best = std::min(best, testutil::score_of(n, tree));
        CHECK(min_score(g).min_score == best);
    }
}

TEST_CASE("min_score 2 iff a Hamiltonian path exists") {
    std::mt19937 rng(73);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + static_cast<int>(rng() % 6);   // up to 9
        Graph g = testutil::random_connected_graph(n, 30 + static_cast<int>(rng() % 40), rng);
        CHECK((min_score(g).min_score == 2) == testutil::has_hamiltonian_path(g));
    }
}

TEST_CASE("determinant matches closed forms") {
    CHECK(spanning_tree_count_determinant(testutil::complete_graph(4)) == 16);
    CHECK(spanning_tree_count_determinant(classic_graph(ClassicKind::Cycle, 5)) == 5);
    CHECK(spanning_tree_count_determinant(testutil::complete_graph(8)) == 262144);   // 8^6
    Graph disconnected = Graph::build(4, {{0, 1}, {2, 3}});
    CHECK(spanning_tree_count_determinant(disconnected) == 0);
    CHECK_THROWS_AS(spanning_tree_count_determinant(testutil::complete_graph(13)), SizeCapError);
}

TEST_CASE("count check: enumeration equals determinant") {
    CHECK(spanning_tree_count_check(testutil::complete_graph(4)));
    CHECK(spanning_tree_count_check(classic_graph(ClassicKind::Cycle, 5)));
    CHECK(spanning_tree_count_check(sharpness_graph(2)));
    std::mt19937 rng(79);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + static_cast<int>(rng() % 9);   // up to 12
        Graph g = testutil::random_connected_graph(n, 40, rng);
        if (spanning_tree_count_determinant(g) > 200000) continue;   // keep the test quick
        CHECK(spanning_tree_count_check(g));
    }
}
