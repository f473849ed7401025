#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fewleaf {

using Vertex = int;

/// Undirected edge with normalized endpoints (u < v).
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalizes endpoint order. Endpoints must be distinct.
Edge make_edge(Vertex a, Vertex b);

class GraphError : public std::runtime_error {
public:
    enum class Kind { OutOfRange, SelfLoop, DuplicateEdge };

    GraphError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Immutable simple undirected graph on dense vertex ids 0..n-1.
/// Adjacency lists are kept sorted; isolated vertices are allowed.
class Graph {
public:
    Graph() = default;

    /// Validates and builds. Rejects out-of-range endpoints, self-loops and
    /// duplicate (or reversed-duplicate) pairs, each with its own error kind.
    static Graph build(int n, std::span<const Edge> edges);
    static Graph build(int n, std::initializer_list<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    long edge_count() const noexcept { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges as a sorted (u < v) list.
    std::vector<Edge> edges() const;

    /// True iff every vertex is reachable from vertex 0. Requires n >= 1.
    bool is_connected() const;

    /// N(X): union of neighborhoods over X, as a sorted vertex set.
    std::vector<Vertex> neighbor_union(std::span<const Vertex> xs) const;

    void check_vertex(Vertex v) const;

private:
    int n_ = 0;
    long m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
};

// Canonical edge-list text format: "n m" header, then m lines "u v" with
// 0 <= u < v < n, ASCII decimal. Strict on parse; serialize emits sorted edges.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph load_edge_list(const std::string& path);
void write_edge_list(const Graph& g, std::ostream& out);
std::string to_edge_list(const Graph& g);
void save_edge_list(const Graph& g, const std::string& path);

/// DOT rendering of the plain graph (export only, never parsed back).
void write_dot(const Graph& g, std::ostream& out);

}  // namespace fewleaf
