#include "fewleaf/structural.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace fewleaf {

namespace {

void check_cap(const Graph& g, int size_cap, const char* op) {
    if (g.vertex_count() > size_cap) {
        throw SizeCapError(std::string(op) + ": instance too large (n=" +
                           std::to_string(g.vertex_count()) + " > cap " +
                           std::to_string(size_cap) + ")");
    }
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> mask(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (Vertex w : g.neighbors(v)) mask[static_cast<std::size_t>(v)] |= 1ULL << w;
    }
    return mask;
}

// Max independent set size within `candidates`, branch and bound.
void mis_search(const std::vector<std::uint64_t>& adj, std::uint64_t candidates,
                int size, int& best) {
    if (size + std::popcount(candidates) <= best) return;
    if (candidates == 0) {
        best = std::max(best, size);
        return;
    }
    int v = std::countr_zero(candidates);
    std::uint64_t bit = 1ULL << v;
    mis_search(adj, candidates & ~(bit | adj[static_cast<std::size_t>(v)]), size + 1, best);
    mis_search(adj, candidates & ~bit, size, best);
}

// Finds an independent set of exactly `target` vertices within `candidates`;
// fills `out` ascending and returns true on success.
bool independent_set_of_size(const std::vector<std::uint64_t>& adj, std::uint64_t candidates,
                             int target, std::vector<Vertex>& out) {
    if (target == 0) return true;
    if (std::popcount(candidates) < target) return false;
    int v = std::countr_zero(candidates);
    std::uint64_t bit = 1ULL << v;
    out.push_back(v);
    if (independent_set_of_size(adj, candidates & ~(bit | adj[static_cast<std::size_t>(v)]),
                                target - 1, out)) {
        return true;
    }
    out.pop_back();
    return independent_set_of_size(adj, candidates & ~bit, target, out);
}

struct SigmaSearch {
    const Graph& g;
    const std::vector<std::uint64_t>& adj;
    std::vector<Vertex> order;        // vertices sorted by degree ascending
    std::vector<long> degree_prefix;  // prefix sums of sorted degrees
    int k;
    long best = std::numeric_limits<long>::max();
    std::vector<Vertex> best_set;
    std::vector<Vertex> chosen;

    // Lower bound for extending `size` picks by (k - size) more vertices.
    long tail_bound(int size) const { return degree_prefix[static_cast<std::size_t>(k - size)]; }

    void run(std::size_t idx, std::uint64_t blocked, long sum, int size) {
        if (size == k) {
            if (sum < best) {
                best = sum;
                best_set = chosen;
            }
            return;
        }
        if (sum + tail_bound(size) >= best) return;
        if (order.size() - idx < static_cast<std::size_t>(k - size)) return;
        for (std::size_t i = idx; i < order.size(); ++i) {
            Vertex v = order[i];
            if (blocked & (1ULL << v)) continue;
            chosen.push_back(v);
            run(i + 1, blocked | (1ULL << v) | adj[static_cast<std::size_t>(v)],
                sum + g.degree(v), size + 1);
            chosen.pop_back();
        }
    }
};

}  // namespace

bool is_independent(const Graph& g, std::span<const Vertex> xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        g.check_vertex(xs[i]);
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            if (xs[i] != xs[j] && g.adjacent(xs[i], xs[j])) return false;
        }
    }
    return true;
}

std::vector<Vertex> neighborhood_class(const Graph& g, std::span<const Vertex> xs, int k) {
    if (k < 1) throw std::invalid_argument("neighborhood_class requires k >= 1");
    std::vector<char> in_x(static_cast<std::size_t>(g.vertex_count()), 0);
    for (Vertex x : xs) {
        g.check_vertex(x);
        in_x[static_cast<std::size_t>(x)] = 1;
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int hits = 0;
        for (Vertex w : g.neighbors(v)) hits += in_x[static_cast<std::size_t>(w)];
        if (hits == k) out.push_back(v);
    }
    return out;
}

int independence_number(const Graph& g, int size_cap) {
    check_cap(g, size_cap, "independence_number");
    if (g.vertex_count() == 0) return 0;
    auto adj = adjacency_masks(g);
    std::uint64_t all = g.vertex_count() == 64 ? ~0ULL : (1ULL << g.vertex_count()) - 1;
    int best = 0;
    mis_search(adj, all, 0, best);
    return best;
}

SigmaResult sigma_k(const Graph& g, int k, int size_cap) {
    if (k < 1) throw std::invalid_argument("sigma_k requires k >= 1");
    check_cap(g, size_cap, "sigma_k");
    if (g.vertex_count() < k) return {std::nullopt, {}};

    SigmaSearch search{g, adjacency_masks(g), {}, {}, k,
                       std::numeric_limits<long>::max(), {}, {}};
    search.order.resize(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex v = 0; v < g.vertex_count(); ++v) search.order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(search.order.begin(), search.order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    search.degree_prefix.assign(static_cast<std::size_t>(k) + 1, 0);
    for (int i = 0; i < k; ++i) {
        long d = i < g.vertex_count() ? g.degree(search.order[static_cast<std::size_t>(i)]) : 0;
        search.degree_prefix[static_cast<std::size_t>(i) + 1] =
            search.degree_prefix[static_cast<std::size_t>(i)] + d;
    }
    search.run(0, 0, 0, 0);
    if (search.best == std::numeric_limits<long>::max()) return {std::nullopt, {}};
    std::sort(search.best_set.begin(), search.best_set.end());
    return {search.best, std::move(search.best_set)};
}

StarCheck is_k1r_free(const Graph& g, int r, int size_cap) {
    if (r < 2) throw std::invalid_argument("is_k1r_free requires r >= 2");
    check_cap(g, size_cap, "is_k1r_free");
    auto adj = adjacency_masks(g);
    for (Vertex c = 0; c < g.vertex_count(); ++c) {
        if (g.degree(c) < r) continue;
        std::uint64_t nbhd = adj[static_cast<std::size_t>(c)];
        std::vector<Vertex> leaves;
        if (independent_set_of_size(adj, nbhd, r, leaves)) {
            std::vector<Vertex> witness{c};
            witness.insert(witness.end(), leaves.begin(), leaves.end());
            return {false, std::move(witness)};
        }
    }
    return {true, {}};
}

HypothesisReport check_hypotheses(const Graph& g, int size_cap) {
    if (g.vertex_count() < 1) throw std::invalid_argument("check_hypotheses requires n >= 1");
    HypothesisReport rep;
    rep.connected = g.is_connected();
    StarCheck star = is_k1r_free(g, 5, size_cap);
    rep.k15_free = star.free;
    rep.witness_star = std::move(star.witness);
    SigmaResult sigma = sigma_k(g, 4, size_cap);
    rep.sigma4 = sigma.value;
    rep.witness_set = std::move(sigma.witness);
    rep.sigma4_ok = !sigma.value.has_value() || *sigma.value >= g.vertex_count() - 1;
    return rep;
}

}  // namespace fewleaf
