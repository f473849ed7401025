#pragma once

// Test-side reference oracles. Everything here is deliberately naive and
// independent of the library's search paths: subset enumeration, edge-subset
// filtering with a throwaway union-find, plain backtracking.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "fewleaf/graph.hpp"
#include "fewleaf/tree.hpp"

namespace testutil {

using fewleaf::Edge;
using fewleaf::Graph;
using fewleaf::Vertex;

inline std::vector<std::vector<Vertex>> subsets_of_size(int n, int k) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == k) {
            out.push_back(pick);
            return;
        }
        for (int v = from; v < n; ++v) {
            pick.push_back(v);
            self(self, v + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline bool brute_independent(const Graph& g, const std::vector<Vertex>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (g.adjacent(xs[i], xs[j])) return false;
        }
    }
    return true;
}

inline int brute_independence_number(const Graph& g) {
    int n = g.vertex_count();
    int best = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        std::vector<Vertex> xs;
        for (int v = 0; v < n; ++v) {
            if (mask & (1ULL << v)) xs.push_back(v);
        }
        if (static_cast<int>(xs.size()) > best && brute_independent(g, xs)) {
            best = static_cast<int>(xs.size());
        }
    }
    return best;
}

inline std::optional<long> brute_sigma_k(const Graph& g, int k) {
    std::optional<long> best;
    for (const auto& xs : subsets_of_size(g.vertex_count(), k)) {
        if (!brute_independent(g, xs)) continue;
        long sum = 0;
        for (Vertex v : xs) sum += g.degree(v);
        if (!best || sum < *best) best = sum;
    }
    return best;
}

// Exhaustive over all (1+r)-subsets: is there an induced K_{1,r}?
inline bool brute_k1r_free(const Graph& g, int r) {
    for (const auto& xs : subsets_of_size(g.vertex_count(), r + 1)) {
        for (Vertex center : xs) {
            std::vector<Vertex> leaves;
            for (Vertex v : xs) {
                if (v != center) leaves.push_back(v);
            }
            bool star = brute_independent(g, leaves);
            for (Vertex v : leaves) star = star && g.adjacent(center, v);
            if (star) return false;
        }
    }
    return true;
}

struct MiniDsu {
    std::vector<int> parent;
    explicit MiniDsu(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    }
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<std::size_t>(a)] = b;
        return true;
    }
};

inline bool is_spanning_tree(int n, const std::vector<Edge>& edges) {
    if (static_cast<int>(edges.size()) != n - 1) return false;
    MiniDsu dsu(n);
    for (const Edge& e : edges) {
        if (!dsu.join(e.u, e.v)) return false;
    }
    return true;
}

// All spanning trees by filtering edge subsets; fine up to ~18 edges.
inline std::vector<std::vector<Edge>> brute_spanning_trees(const Graph& g) {
    std::vector<Edge> edges = g.edges();
    int n = g.vertex_count();
    std::vector<std::vector<Edge>> out;
    if (n < 2) return out;
    int m = static_cast<int>(edges.size());
    std::vector<int> idx(static_cast<std::size_t>(n - 1));
    auto rec = [&](auto&& self, int pos, int from) -> void {
        if (pos == n - 1) {
            std::vector<Edge> pick;
            for (int i : idx) pick.push_back(edges[static_cast<std::size_t>(i)]);
            if (is_spanning_tree(n, pick)) out.push_back(pick);
            return;
        }
        for (int i = from; i < m; ++i) {
            idx[static_cast<std::size_t>(pos)] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline int score_of(int n, const std::vector<Edge>& edges) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const Edge& e : edges) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    int leaves = 0, branches = 0;
    for (int v = 0; v < n; ++v) {
        if (deg[static_cast<std::size_t>(v)] == 1) ++leaves;
        if (deg[static_cast<std::size_t>(v)] >= 3) ++branches;
    }
    return leaves + branches;
}

inline bool has_hamiltonian_path(const Graph& g) {
    int n = g.vertex_count();
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, Vertex at, int len) -> bool {
        if (len == n) return true;
        for (Vertex w : g.neighbors(at)) {
            if (used[static_cast<std::size_t>(w)]) continue;
            used[static_cast<std::size_t>(w)] = 1;
            if (self(self, w, len + 1)) return true;
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    for (Vertex s = 0; s < n; ++s) {
        std::fill(used.begin(), used.end(), 0);
        used[static_cast<std::size_t>(s)] = 1;
        if (rec(rec, s, 1)) return true;
    }
    return n == 1;
}

// Uniform labeled tree on n vertices from a random Pruefer sequence.
inline std::vector<Edge> random_tree_edges(int n, std::mt19937& rng) {
    if (n == 2) return {{0, 1}};
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int& s : seq) s = static_cast<int>(rng() % static_cast<unsigned>(n));
    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++degree[static_cast<std::size_t>(s)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v) {
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);
    }
    std::vector<Edge> edges;
    for (int s : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back(fewleaf::make_edge(leaf, s));
        if (--degree[static_cast<std::size_t>(s)] == 1) leaves.insert(s);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.push_back(fewleaf::make_edge(a, b));
    return edges;
}

inline Graph random_connected_graph(int n, int percent, std::mt19937& rng) {
    while (true) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (static_cast<int>(rng() % 100) < percent) edges.push_back({u, v});
            }
        }
        Graph g = Graph::build(n, edges);
        if (n == 1 || g.is_connected()) return g;
    }
}

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    }
    return Graph::build(n, edges);
}

}  // namespace testutil
