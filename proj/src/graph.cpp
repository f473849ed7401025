#include "fewleaf/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace fewleaf {

Edge make_edge(Vertex a, Vertex b) {
    if (a == b) {
        throw GraphError(GraphError::Kind::SelfLoop,
                         "self-loop at vertex " + std::to_string(a));
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

Graph Graph::build(int n, std::span<const Edge> edges) {
    if (n < 0) throw GraphError(GraphError::Kind::OutOfRange, "negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(static_cast<std::size_t>(n), {});
    std::vector<Edge> seen;
    seen.reserve(edges.size());
    for (const Edge& e : edges) {
        if (e.u == e.v) {
            throw GraphError(GraphError::Kind::SelfLoop,
                             "self-loop at vertex " + std::to_string(e.u));
        }
        Edge norm = make_edge(e.u, e.v);
        if (norm.u < 0 || norm.v >= n) {
            throw GraphError(GraphError::Kind::OutOfRange,
                             "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                 ") out of range for n=" + std::to_string(n));
        }
        seen.push_back(norm);
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i) {
        if (seen[i] == seen[i - 1]) {
            throw GraphError(GraphError::Kind::DuplicateEdge,
                             "duplicate edge (" + std::to_string(seen[i].u) + "," +
                                 std::to_string(seen[i].v) + ")");
        }
    }
    for (const Edge& e : seen) {
        g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.m_ = static_cast<long>(seen.size());
    return g;
}

Graph Graph::build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw GraphError(GraphError::Kind::OutOfRange,
                         "vertex " + std::to_string(v) + " out of range for n=" +
                             std::to_string(n_));
    }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nb = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : adj_[static_cast<std::size_t>(u)]) {
            if (u < v) out.push_back({u, v});
        }
    }
    return out;
}

bool Graph::is_connected() const {
    if (n_ < 1) throw std::invalid_argument("is_connected requires n >= 1");
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        ++count;
        for (Vertex w : adj_[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

std::vector<Vertex> Graph::neighbor_union(std::span<const Vertex> xs) const {
    std::vector<char> mark(static_cast<std::size_t>(n_), 0);
    for (Vertex x : xs) {
        check_vertex(x);
        for (Vertex w : adj_[static_cast<std::size_t>(x)]) mark[static_cast<std::size_t>(w)] = 1;
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v) {
        if (mark[static_cast<std::size_t>(v)]) out.push_back(v);
    }
    return out;
}

namespace {

// Consumes one "a b" line of the canonical format.
bool read_int_pair(std::istream& in, long& a, long& b) { return static_cast<bool>(in >> a >> b); }

}  // namespace

Graph parse_edge_list(std::istream& in) {
    long n = 0, m = 0;
    if (!read_int_pair(in, n, m)) throw ParseError("malformed header: expected 'n m'");
    if (n < 1) throw ParseError("vertex count must be positive");
    if (m < 0) throw ParseError("negative edge count");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) {
        long u = 0, v = 0;
        if (!read_int_pair(in, u, v)) {
            throw ParseError("expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        }
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw ParseError("edge endpoint out of range on edge " + std::to_string(i));
        }
        if (u >= v) throw ParseError("edges must satisfy u < v (edge " + std::to_string(i) + ")");
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    std::string tail;
    if (in >> tail) throw ParseError("trailing content after edge list: '" + tail + "'");
    try {
        return Graph::build(static_cast<int>(n), edges);
    } catch (const GraphError& e) {
        throw ParseError(std::string("invalid edge list: ") + e.what());
    }
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Graph load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(g, out);
    return out.str();
}

void save_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    write_edge_list(g, out);
}

void write_dot(const Graph& g, std::ostream& out) {
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
}

}  // namespace fewleaf
