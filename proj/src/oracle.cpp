#include "fewleaf/oracle.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "fewleaf/structural.hpp"

namespace fewleaf {

namespace {

// Union-find with rollback so contraction branches restore in O(1) per op.
struct Dsu {
    std::vector<int> parent;
    std::vector<int> size;
    std::vector<int> journal;   // roots attached, for undo

    explicit Dsu(int n) : parent(static_cast<std::size_t>(n)), size(static_cast<std::size_t>(n), 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) const {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    }

    // Returns false if already joined.
    bool join(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[static_cast<std::size_t>(a)] < size[static_cast<std::size_t>(b)]) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        size[static_cast<std::size_t>(a)] += size[static_cast<std::size_t>(b)];
        journal.push_back(b);
        return true;
    }

    void undo() {
        int b = journal.back();
        journal.pop_back();
        int a = parent[static_cast<std::size_t>(b)];
        parent[static_cast<std::size_t>(b)] = b;
        size[static_cast<std::size_t>(a)] -= size[static_cast<std::size_t>(b)];
    }
};

struct Enumerator {
    const Graph& g;
    const TreeVisitor& visit;
    long long cap;
    std::vector<Edge> edges;      // fixed order for the include/exclude split
    Dsu dsu;
    std::vector<Edge> chosen;
    long long count = 0;
    bool stopped = false;

    Enumerator(const Graph& graph, const TreeVisitor& v, long long c)
        : g(graph), visit(v), cap(c), dsu(graph.vertex_count()) {
        edges = g.edges();
        // Order by id distance so the include-first recursion meets path-like
        // trees early; that makes the score-target early exits bite.
        std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
            return std::tuple(a.v - a.u, a.u, a.v) < std::tuple(b.v - b.u, b.u, b.v);
        });
        chosen.reserve(static_cast<std::size_t>(g.vertex_count()));
    }

    // Can the quotient still be connected using edges from `from` on?
    bool completable(std::size_t from) const {
        int n = g.vertex_count();
        std::vector<int> comp_seen(static_cast<std::size_t>(n), 0);
        int blocks = 0;
        for (int v = 0; v < n; ++v) {
            int r = dsu.find(v);
            if (!comp_seen[static_cast<std::size_t>(r)]) {
                comp_seen[static_cast<std::size_t>(r)] = 1;
                ++blocks;
            }
        }
        if (blocks == 1) return true;
        // BFS over blocks via the remaining edges.
        std::vector<int> mark(static_cast<std::size_t>(n), 0);
        int start = dsu.find(0);
        mark[static_cast<std::size_t>(start)] = 1;
        int reached = 1;
        bool progress = true;
        while (progress && reached < blocks) {
            progress = false;
            for (std::size_t i = from; i < edges.size(); ++i) {
                int a = dsu.find(edges[i].u);
                int b = dsu.find(edges[i].v);
                if (mark[static_cast<std::size_t>(a)] == mark[static_cast<std::size_t>(b)]) continue;
                mark[static_cast<std::size_t>(a)] = mark[static_cast<std::size_t>(b)] = 1;
                ++reached;
                progress = true;
            }
        }
        return reached == blocks;
    }

    void emit() {
        if (++count > cap) {
            throw EnumerationCapError("spanning tree enumeration exceeded cap of " +
                                      std::to_string(cap) + " trees");
        }
        if (!visit(chosen)) stopped = true;
    }

    void run(std::size_t i) {
        if (stopped) return;
        if (chosen.size() + 1 == static_cast<std::size_t>(g.vertex_count())) {
            emit();
            return;
        }
        if (i >= edges.size()) return;
        const Edge& e = edges[i];
        if (dsu.find(e.u) == dsu.find(e.v)) {
            run(i + 1);   // chord of the contracted graph; never usable again
            return;
        }
        dsu.join(e.u, e.v);
        chosen.push_back(e);
        run(i + 1);
        chosen.pop_back();
        dsu.undo();
        if (stopped) return;
        // Deleting e is only viable when the rest still connects everything;
        // otherwise e bridges the quotient and sits in every remaining tree.
        if (completable(i + 1)) run(i + 1);
    }
};

int score_of_edges(int n, std::span<const Edge> edges, std::vector<int>& deg) {
    deg.assign(static_cast<std::size_t>(n), 0);
    for (const Edge& e : edges) {
        ++deg[static_cast<std::size_t>(e.u)];
        ++deg[static_cast<std::size_t>(e.v)];
    }
    int leaves = 0, branches = 0;
    for (int v = 0; v < n; ++v) {
        if (deg[static_cast<std::size_t>(v)] == 1) ++leaves;
        else if (deg[static_cast<std::size_t>(v)] >= 3) ++branches;
    }
    return leaves + branches;
}

}  // namespace

long long enumerate_spanning_trees(const Graph& g, const TreeVisitor& visit, long long cap) {
    if (g.vertex_count() < 1) throw std::invalid_argument("enumeration requires n >= 1");
    if (!g.is_connected()) throw DisconnectedError("enumeration requires a connected graph");
    if (g.vertex_count() == 1) {
        visit({});
        return 1;
    }
    Enumerator en(g, visit, cap);
    en.run(0);
    return en.count;
}

OracleResult min_score(const Graph& g, const OracleOptions& opts) {
    if (g.vertex_count() < 1) throw std::invalid_argument("min_score requires n >= 1");
    if (!g.is_connected()) throw DisconnectedError("min_score requires a connected graph");
    if (g.vertex_count() == 1) {
        return {0, Tree::single_vertex(g, 0), 1, true};
    }
    int best = std::numeric_limits<int>::max();
    std::vector<Edge> best_edges;
    std::vector<int> deg;
    long long seen = enumerate_spanning_trees(
        g,
        [&](std::span<const Edge> edges) {
            int score = score_of_edges(g.vertex_count(), edges, deg);
            if (score < best) {
                best = score;
                best_edges.assign(edges.begin(), edges.end());
            }
            return best > opts.target_score;
        },
        opts.tree_cap);
    OracleResult res{best, Tree::build(g, best_edges), seen, best <= 5};
    return res;
}

long long spanning_tree_count_determinant(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("determinant requires n >= 1");
    if (n > 12) {
        throw SizeCapError("spanning_tree_count_determinant: n=" + std::to_string(n) +
                           " exceeds the exact-arithmetic limit of 12");
    }
    if (n == 1) return 1;
    // Laplacian cofactor (delete row/column 0), Bareiss fraction-free
    // elimination. Intermediates are minors of an integer matrix with
    // entries <= 12, well inside 64-bit range at this size.
    const int d = n - 1;
    std::vector<std::vector<long long>> a(static_cast<std::size_t>(d),
                                          std::vector<long long>(static_cast<std::size_t>(d), 0));
    for (int i = 0; i < d; ++i) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = g.degree(i + 1);
    for (const Edge& e : g.edges()) {
        if (e.u == 0) continue;
        a[static_cast<std::size_t>(e.u - 1)][static_cast<std::size_t>(e.v - 1)] = -1;
        a[static_cast<std::size_t>(e.v - 1)][static_cast<std::size_t>(e.u - 1)] = -1;
    }
    long long prev = 1;
    int sign = 1;
    for (int k = 0; k < d - 1; ++k) {
        if (a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] == 0) {
            int swap_row = -1;
            for (int r = k + 1; r < d; ++r) {
                if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] != 0) {
                    swap_row = r;
                    break;
                }
            }
            if (swap_row == -1) return 0;
            std::swap(a[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < d; ++i) {
            for (int j = k + 1; j < d; ++j) {
                long long num = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                                    a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)] -
                                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                                    a[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = num / prev;
            }
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = 0;
        }
        prev = a[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
    }
    return sign * a[static_cast<std::size_t>(d - 1)][static_cast<std::size_t>(d - 1)];
}

bool spanning_tree_count_check(const Graph& g) {
    long long det = spanning_tree_count_determinant(g);
    long long enumerated = 0;
    if (g.is_connected()) {
        enumerated = enumerate_spanning_trees(g, [](std::span<const Edge>) { return true; });
    }
    return enumerated == det;
}

}  // namespace fewleaf
