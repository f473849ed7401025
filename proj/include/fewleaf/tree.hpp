#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fewleaf/graph.hpp"

namespace fewleaf {

class TreeError : public std::runtime_error {
public:
    enum class Kind {
        NotATree,            // cycle, disconnection or duplicate edge
        EdgeNotInHost,
        VertexNotInTree,
        SingleVertexMetrics,
        TooManyBranches,
    };

    TreeError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// A tree on a subset of a host graph's vertices. Values are immutable after
/// construction; rewirings build new values.
class Tree {
public:
    /// Empty placeholder (no host); every query except size() requires a
    /// tree obtained from one of the factories below.
    Tree() = default;

    /// Builds from tree edges; the vertex set is the set of edge endpoints.
    /// Every edge must exist in the host and the edge set must form a tree.
    static Tree build(const Graph& host, std::span<const Edge> tree_edges);
    static Tree build(const Graph& host, std::initializer_list<Edge> tree_edges);

    /// The one-vertex tree (representable but rejected by metrics()).
    static Tree single_vertex(const Graph& host, Vertex v);

    /// Depth-first spanning tree rooted at start. Host must be connected.
    static Tree spanning_dfs(const Graph& host, Vertex start);

    const Graph& host() const noexcept { return *host_; }
    int size() const noexcept { return static_cast<int>(vertices_.size()); }
    bool spanning() const noexcept { return size() == host_->vertex_count(); }
    bool contains(Vertex v) const;
    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    std::vector<Edge> edges() const;
    std::span<const Vertex> tree_neighbors(Vertex v) const;
    int tree_degree(Vertex v) const;
    bool has_tree_edge(Vertex a, Vertex b) const;

    /// Designated traversal root (smallest vertex); carries no semantics.
    Vertex root() const { return vertices_.front(); }

private:
    const Graph* host_ = nullptr;
    std::vector<Vertex> vertices_;            // sorted
    std::vector<char> in_tree_;               // indexed by host vertex id
    std::vector<std::vector<Vertex>> adj_;    // tree adjacency, sorted
};

struct TreeMetrics {
    std::vector<Vertex> leaves;     // degree 1
    std::vector<Vertex> branches;   // degree >= 3
    int score = 0;                  // |L| + |B|
};

/// Leaf/branch anatomy. Rejects single-vertex trees (degree classes are
/// undefined there).
TreeMetrics metrics(const Tree& t);

/// The unique tree path from u to v, oriented u -> v (so predecessors and
/// successors of interior vertices are relative to this call's direction).
std::vector<Vertex> tree_path(const Tree& t, Vertex u, Vertex v);
int tree_distance(const Tree& t, Vertex u, Vertex v);

enum class TreeShape { Path, OneBranch, TwoBranch };

struct Leg {
    Vertex leaf;                    // the tree leaf inside the component
    Vertex attach;                  // unique component vertex adjacent to the anchor
    Vertex anchor;                  // branch vertex (s or t) the leg hangs from
    std::vector<Vertex> component;  // sorted vertex set of the leg
};

struct BranchDecomposition {
    TreeShape shape = TreeShape::Path;
    std::optional<Vertex> s;        // present for OneBranch (= r) and TwoBranch
    std::optional<Vertex> t;        // present for TwoBranch only
    std::vector<Leg> legs;          // sorted by (anchor == s first, then leaf id)
    std::vector<Vertex> spine;      // interior of the s..t path, in s -> t order
};

/// Decomposes trees with at most two branch vertices into branch vertices,
/// legs and spine. For TwoBranch, s is the branch vertex of larger tree
/// degree; on equal degrees the smaller vertex id. Rejects >= 3 branches.
BranchDecomposition decompose(const Tree& t);

/// DOT rendering of the host graph with tree edges bold.
void write_dot_overlay(const Tree& t, std::ostream& out);

}  // namespace fewleaf
