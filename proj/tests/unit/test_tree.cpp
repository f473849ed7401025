#include "doctest.h"

#include <algorithm>
#include <random>
#include <sstream>

#include "fewleaf/families.hpp"
#include "fewleaf/tree.hpp"

#include "helpers.hpp"

using namespace fewleaf;

namespace {

Tree whole_graph_tree(const Graph& g) { return Tree::build(g, g.edges()); }

}  // namespace

TEST_CASE("build validates tree-ness") {
    Graph k4 = testutil::complete_graph(4);
    CHECK_THROWS_AS(Tree::build(k4, {{0, 1}, {1, 2}, {0, 2}}), TreeError);          // cycle
    CHECK_THROWS_AS(Tree::build(k4, {{0, 1}, {2, 3}}), TreeError);                  // forest
    Graph p3 = classic_graph(ClassicKind::Path, 3);
    CHECK_THROWS_AS(Tree::build(p3, {{0, 2}}), TreeError);                          // not host edge
    Tree t = Tree::build(k4, {{0, 1}, {1, 2}});
    CHECK(t.size() == 3);
    CHECK_FALSE(t.spanning());
    CHECK(t.root() == 0);
}

TEST_CASE("metrics on basic shapes") {
    Graph p5 = classic_graph(ClassicKind::Path, 5);
    TreeMetrics path = metrics(whole_graph_tree(p5));
    CHECK(path.leaves.size() == 2);
    CHECK(path.branches.empty());
    CHECK(path.score == 2);

    Graph star6 = classic_graph(ClassicKind::CompleteBipartite, 1, 6);
    TreeMetrics star = metrics(whole_graph_tree(star6));
    CHECK(star.leaves.size() == 6);
    CHECK(star.branches.size() == 1);
    CHECK(star.score == 7);

    // The m=1 sharpness graph is itself a tree scoring 6.
    Graph sharp = sharpness_graph(1);
    TreeMetrics dbl = metrics(whole_graph_tree(sharp));
    CHECK(dbl.leaves.size() == 4);
    CHECK(dbl.branches.size() == 2);
    CHECK(dbl.score == 6);

    Tree lone = Tree::single_vertex(p5, 2);
    CHECK_THROWS_AS(metrics(lone), TreeError);
}

TEST_CASE("tree_path") {
    Graph p4 = classic_graph(ClassicKind::Path, 4);
    Tree t = whole_graph_tree(p4);
    CHECK(tree_path(t, 0, 3) == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(tree_distance(t, 0, 3) == 3);
    CHECK(tree_path(t, 2, 2) == std::vector<Vertex>{2});
    CHECK_THROWS_AS(tree_path(t, 0, 9), GraphError);

    Graph sharp_host = sharpness_graph(1);
    Tree sharp = whole_graph_tree(sharp_host);
    CHECK(tree_path(sharp, 4, 5) == std::vector<Vertex>{4, 5});
    CHECK(tree_distance(sharp, 4, 5) == 1);
}

TEST_CASE("tree_path reverses") {
    std::mt19937 rng(41);
    Graph host = testutil::complete_graph(12);
    for (int trial = 0; trial < 20; ++trial) {
        Tree t = Tree::build(host, testutil::random_tree_edges(12, rng));
        Vertex u = static_cast<Vertex>(rng() % 12);
        Vertex v = static_cast<Vertex>(rng() % 12);
        auto forward = tree_path(t, u, v);
        auto backward = tree_path(t, v, u);
        std::reverse(backward.begin(), backward.end());
        CHECK(forward == backward);
    }
}

TEST_CASE("decompose shapes") {
    Graph p5 = classic_graph(ClassicKind::Path, 5);
    BranchDecomposition path = decompose(whole_graph_tree(p5));
    CHECK(path.shape == TreeShape::Path);
    CHECK(path.legs.empty());

    // Spider: center 0, five legs of length 2 (11 vertices).
    std::vector<Edge> spider_edges;
    for (int leg = 0; leg < 5; ++leg) {
        int a = 1 + 2 * leg, b = 2 + 2 * leg;
        spider_edges.push_back(make_edge(0, a));
        spider_edges.push_back(make_edge(a, b));
    }
    Graph spider_host = Graph::build(11, spider_edges);
    BranchDecomposition spider = decompose(whole_graph_tree(spider_host));
    CHECK(spider.shape == TreeShape::OneBranch);
    CHECK(*spider.s == 0);
    CHECK_FALSE(spider.t.has_value());
    REQUIRE(spider.legs.size() == 5);
    for (const Leg& leg : spider.legs) {
        CHECK(leg.component.size() == 2);
        CHECK(leg.anchor == 0);
        CHECK(leg.attach != leg.leaf);
    }

    BranchDecomposition sharp = decompose(whole_graph_tree(sharpness_graph(1)));
    CHECK(sharp.shape == TreeShape::TwoBranch);
    CHECK(*sharp.s == 4);   // equal degrees: smaller id first
    CHECK(*sharp.t == 5);
    CHECK(sharp.spine.empty());
    REQUIRE(sharp.legs.size() == 4);
    for (const Leg& leg : sharp.legs) {
        CHECK(leg.component.size() == 1);
        CHECK(leg.leaf == leg.attach);
    }
}

TEST_CASE("decompose orders s by tree degree") {
    // Branch 1 has degree 4, branch 5 has degree 3.
    Graph host = Graph::build(9, {{0, 1}, {1, 2}, {1, 3}, {1, 5}, {4, 5}, {5, 6}, {6, 7}, {7, 8}});
    BranchDecomposition d = decompose(whole_graph_tree(host));
    CHECK(d.shape == TreeShape::TwoBranch);
    CHECK(*d.s == 1);
    CHECK(*d.t == 5);
    CHECK(d.spine.empty());   // 1-5 adjacent
    int s_mass = 0;
    for (const Leg& leg : d.legs) {
        if (leg.anchor == 1) s_mass += static_cast<int>(leg.component.size());
    }
    CHECK(s_mass == 3);
}

TEST_CASE("decompose rejects three branch vertices") {
    // Caterpillar with branches at 1, 3, 5.
    Graph host = Graph::build(9, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}, {5, 6}, {5, 7}, {7, 8}});
    CHECK_THROWS_AS(decompose(whole_graph_tree(host)), TreeError);
}

TEST_CASE("decompose partitions the vertex set") {
    std::mt19937 rng(43);
    Graph host = testutil::complete_graph(14);
    int checked = 0;
    while (checked < 25) {
        Tree t = Tree::build(host, testutil::random_tree_edges(14, rng));
        TreeMetrics m = metrics(t);
        if (m.branches.size() > 2) continue;
        ++checked;
        BranchDecomposition d = decompose(t);
        std::vector<Vertex> all;
        if (d.s) all.push_back(*d.s);
        if (d.t) all.push_back(*d.t);
        all.insert(all.end(), d.spine.begin(), d.spine.end());
        for (const Leg& leg : d.legs) {
            all.insert(all.end(), leg.component.begin(), leg.component.end());
            CHECK(t.tree_degree(leg.leaf) == 1);
            CHECK(t.has_tree_edge(leg.anchor, leg.attach));
        }
        std::sort(all.begin(), all.end());
        if (d.shape == TreeShape::Path) continue;   // paths carry no parts
        auto verts = t.vertices();
        CHECK(all == std::vector<Vertex>(verts.begin(), verts.end()));
    }
}

TEST_CASE("random trees satisfy the degree identities") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 2 + static_cast<int>(rng() % 49);
        Graph host = testutil::complete_graph(n);
        Tree t = Tree::build(host, testutil::random_tree_edges(n, rng));
        TreeMetrics m = metrics(t);
        long excess = 0;
        long branch_excess = 0;
        for (Vertex v : t.vertices()) {
            excess += t.tree_degree(v) - 2;
            if (t.tree_degree(v) >= 3) branch_excess += t.tree_degree(v) - 2;
        }
        CHECK(excess == -2);
        CHECK(static_cast<long>(m.leaves.size()) == 2 + branch_excess);
        if (m.branches.size() >= 2) CHECK(m.leaves.size() >= 4);
        if (m.score <= 5) CHECK(m.branches.size() <= 1);
    }
}

TEST_CASE("dot overlay marks tree edges bold") {
    Graph c4 = classic_graph(ClassicKind::Cycle, 4);
    Tree t = Tree::build(c4, {{0, 1}, {1, 2}, {2, 3}});
    std::ostringstream out;
    write_dot_overlay(t, out);
    std::string dot = out.str();
    CHECK(dot.find("0 -- 1 [style=bold") != std::string::npos);
    CHECK(dot.find("0 -- 3;") != std::string::npos);
}
