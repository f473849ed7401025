#include "fewleaf/tree.hpp"

#include <algorithm>
#include <ostream>
#include <set>

namespace fewleaf {

namespace {

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

Tree Tree::build(const Graph& host, std::span<const Edge> tree_edges) {
    Tree t;
    t.host_ = &host;
    t.in_tree_.assign(static_cast<std::size_t>(host.vertex_count()), 0);
    t.adj_.assign(static_cast<std::size_t>(host.vertex_count()), {});

    std::vector<Edge> norm;
    norm.reserve(tree_edges.size());
    for (const Edge& e : tree_edges) {
        Edge ne = make_edge(e.u, e.v);
        host.check_vertex(ne.u);
        host.check_vertex(ne.v);
        if (!host.adjacent(ne.u, ne.v)) {
            throw TreeError(TreeError::Kind::EdgeNotInHost,
                            "tree edge " + edge_str(ne) + " is not a host edge");
        }
        norm.push_back(ne);
    }
    std::sort(norm.begin(), norm.end());
    for (std::size_t i = 1; i < norm.size(); ++i) {
        if (norm[i] == norm[i - 1]) {
            throw TreeError(TreeError::Kind::NotATree,
                            "duplicate tree edge " + edge_str(norm[i]));
        }
    }
    for (const Edge& e : norm) {
        for (Vertex end : {e.u, e.v}) {
            if (!t.in_tree_[static_cast<std::size_t>(end)]) {
                t.in_tree_[static_cast<std::size_t>(end)] = 1;
                t.vertices_.push_back(end);
            }
        }
        t.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        t.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::sort(t.vertices_.begin(), t.vertices_.end());
    for (Vertex v : t.vertices_) {
        auto& nb = t.adj_[static_cast<std::size_t>(v)];
        std::sort(nb.begin(), nb.end());
    }
    if (t.vertices_.empty()) {
        throw TreeError(TreeError::Kind::NotATree, "empty edge set; use single_vertex");
    }
    if (norm.size() + 1 != t.vertices_.size()) {
        throw TreeError(TreeError::Kind::NotATree,
                        std::to_string(norm.size()) + " edges on " +
                            std::to_string(t.vertices_.size()) + " vertices (cycle present)");
    }
    // |E| = |V| - 1, so connectivity alone certifies tree-ness.
    std::vector<Vertex> stack{t.vertices_.front()};
    std::vector<char> seen(static_cast<std::size_t>(host.vertex_count()), 0);
    seen[static_cast<std::size_t>(t.vertices_.front())] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        ++count;
        for (Vertex w : t.adj_[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
    }
    if (count != t.vertices_.size()) {
        throw TreeError(TreeError::Kind::NotATree, "edge set is disconnected");
    }
    return t;
}

Tree Tree::build(const Graph& host, std::initializer_list<Edge> tree_edges) {
    return build(host, std::span<const Edge>(tree_edges.begin(), tree_edges.size()));
}

Tree Tree::single_vertex(const Graph& host, Vertex v) {
    host.check_vertex(v);
    Tree t;
    t.host_ = &host;
    t.in_tree_.assign(static_cast<std::size_t>(host.vertex_count()), 0);
    t.adj_.assign(static_cast<std::size_t>(host.vertex_count()), {});
    t.in_tree_[static_cast<std::size_t>(v)] = 1;
    t.vertices_.push_back(v);
    return t;
}

Tree Tree::spanning_dfs(const Graph& host, Vertex start) {
    host.check_vertex(start);
    std::vector<char> seen(static_cast<std::size_t>(host.vertex_count()), 0);
    std::vector<Edge> edges;
    std::vector<Vertex> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    // Explicit stack; neighbors pushed in reverse so smaller ids are explored
    // first, which pins the tree for a given start vertex.
    std::vector<std::pair<Vertex, Vertex>> frontier;  // (parent, child)
    auto push_children = [&](Vertex v) {
        auto nb = host.neighbors(v);
        for (auto it = nb.rbegin(); it != nb.rend(); ++it) frontier.push_back({v, *it});
    };
    push_children(start);
    while (!frontier.empty()) {
        auto [parent, child] = frontier.back();
        frontier.pop_back();
        if (seen[static_cast<std::size_t>(child)]) continue;
        seen[static_cast<std::size_t>(child)] = 1;
        edges.push_back(make_edge(parent, child));
        push_children(child);
    }
    if (edges.size() + 1 != static_cast<std::size_t>(host.vertex_count())) {
        throw TreeError(TreeError::Kind::NotATree, "host graph is not connected");
    }
    if (host.vertex_count() == 1) return single_vertex(host, start);
    return build(host, edges);
}

bool Tree::contains(Vertex v) const {
    host_->check_vertex(v);
    return in_tree_[static_cast<std::size_t>(v)] != 0;
}

std::vector<Edge> Tree::edges() const {
    std::vector<Edge> out;
    out.reserve(vertices_.size());
    for (Vertex v : vertices_) {
        for (Vertex w : adj_[static_cast<std::size_t>(v)]) {
            if (v < w) out.push_back({v, w});
        }
    }
    return out;
}

std::span<const Vertex> Tree::tree_neighbors(Vertex v) const {
    if (!contains(v)) {
        throw TreeError(TreeError::Kind::VertexNotInTree,
                        "vertex " + std::to_string(v) + " is not in the tree");
    }
    return adj_[static_cast<std::size_t>(v)];
}

int Tree::tree_degree(Vertex v) const {
    return static_cast<int>(tree_neighbors(v).size());
}

bool Tree::has_tree_edge(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) return false;
    const auto& nb = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(nb.begin(), nb.end(), b);
}

TreeMetrics metrics(const Tree& t) {
    if (t.size() < 2) {
        throw TreeError(TreeError::Kind::SingleVertexMetrics,
                        "leaf/branch classes are undefined on a single-vertex tree");
    }
    TreeMetrics m;
    for (Vertex v : t.vertices()) {
        int d = t.tree_degree(v);
        if (d == 1) m.leaves.push_back(v);
        else if (d >= 3) m.branches.push_back(v);
    }
    m.score = static_cast<int>(m.leaves.size() + m.branches.size());
    return m;
}

std::vector<Vertex> tree_path(const Tree& t, Vertex u, Vertex v) {
    if (!t.contains(u)) {
        throw TreeError(TreeError::Kind::VertexNotInTree,
                        "vertex " + std::to_string(u) + " is not in the tree");
    }
    if (!t.contains(v)) {
        throw TreeError(TreeError::Kind::VertexNotInTree,
                        "vertex " + std::to_string(v) + " is not in the tree");
    }
    if (u == v) return {u};
    // BFS from u with parent links, then unwind from v.
    std::vector<Vertex> parent(static_cast<std::size_t>(t.host().vertex_count()), -1);
    std::vector<Vertex> queue{u};
    parent[static_cast<std::size_t>(u)] = u;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex x = queue[head];
        if (x == v) break;
        for (Vertex w : t.tree_neighbors(x)) {
            if (parent[static_cast<std::size_t>(w)] == -1) {
                parent[static_cast<std::size_t>(w)] = x;
                queue.push_back(w);
            }
        }
    }
    std::vector<Vertex> path;
    for (Vertex x = v; x != u; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
    path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
}

int tree_distance(const Tree& t, Vertex u, Vertex v) {
    return static_cast<int>(tree_path(t, u, v).size()) - 1;
}

BranchDecomposition decompose(const Tree& t) {
    TreeMetrics m = metrics(t);
    BranchDecomposition d;
    if (m.branches.size() > 2) {
        throw TreeError(TreeError::Kind::TooManyBranches,
                        "decompose: tree has " + std::to_string(m.branches.size()) +
                            " branch vertices");
    }
    if (m.branches.empty()) {
        d.shape = TreeShape::Path;
        return d;
    }

    if (m.branches.size() == 1) {
        d.shape = TreeShape::OneBranch;
        d.s = m.branches.front();
    } else {
        d.shape = TreeShape::TwoBranch;
        Vertex a = m.branches[0], b = m.branches[1];
        int da = t.tree_degree(a), db = t.tree_degree(b);
        // Higher tree degree first; smaller id on ties.
        if (da > db || (da == db && a < b)) {
            d.s = a;
            d.t = b;
        } else {
            d.s = b;
            d.t = a;
        }
        std::vector<Vertex> st_path = tree_path(t, *d.s, *d.t);
        d.spine.assign(st_path.begin() + 1, st_path.end() - 1);
    }

    std::vector<char> blocked(static_cast<std::size_t>(t.host().vertex_count()), 0);
    blocked[static_cast<std::size_t>(*d.s)] = 1;
    if (d.t) blocked[static_cast<std::size_t>(*d.t)] = 1;
    std::vector<char> on_spine(static_cast<std::size_t>(t.host().vertex_count()), 0);
    for (Vertex v : d.spine) on_spine[static_cast<std::size_t>(v)] = 1;

    std::vector<char> seen = blocked;
    for (Vertex v : d.spine) seen[static_cast<std::size_t>(v)] = 1;
    for (Vertex start : t.vertices()) {
        if (seen[static_cast<std::size_t>(start)] || on_spine[static_cast<std::size_t>(start)]) continue;
        // Flood one leg component of T - {s, t}.
        Leg leg;
        leg.anchor = -1;
        std::vector<Vertex> stack{start};
        seen[static_cast<std::size_t>(start)] = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            leg.component.push_back(x);
            for (Vertex w : t.tree_neighbors(x)) {
                if (blocked[static_cast<std::size_t>(w)]) {
                    leg.attach = x;
                    leg.anchor = w;
                    continue;
                }
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(leg.component.begin(), leg.component.end());
        // The leg is a path; its tree leaf is the unique component vertex of
        // tree degree one.
        leg.leaf = -1;
        for (Vertex x : leg.component) {
            if (t.tree_degree(x) == 1) leg.leaf = x;
        }
        if (leg.component.size() == 1) leg.leaf = leg.component.front();
        d.legs.push_back(std::move(leg));
    }

    std::sort(d.legs.begin(), d.legs.end(), [&](const Leg& a, const Leg& b) {
        bool a_at_s = a.anchor == *d.s;
        bool b_at_s = b.anchor == *d.s;
        if (a_at_s != b_at_s) return a_at_s;
        return a.leaf < b.leaf;
    });
    return d;
}

void write_dot_overlay(const Tree& t, std::ostream& out) {
    const Graph& g = t.host();
    std::set<Edge> tree_edges;
    for (const Edge& e : t.edges()) tree_edges.insert(e);
    out << "graph G {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
    for (const Edge& e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (tree_edges.count(e)) out << " [style=bold, penwidth=2]";
        out << ";\n";
    }
    out << "}\n";
}

}  // namespace fewleaf
