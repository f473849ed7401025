#include "fewleaf/exchange.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

namespace fewleaf {

const char* to_string(MoveKind k) {
    switch (k) {
        case MoveKind::Extend: return "Extend";
        case MoveKind::LeafReattach: return "LeafReattach";
        case MoveKind::TwoSwap: return "TwoSwap";
        case MoveKind::ThreeSwap: return "ThreeSwap";
        case MoveKind::FourSwap: return "FourSwap";
        case MoveKind::BranchMerge: return "BranchMerge";
    }
    return "?";
}

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Solved: return "solved";
        case SolveStatus::StuckNotSpanning: return "stuck_not_spanning";
        case SolveStatus::StuckAtScore: return "stuck_at_score";
        case SolveStatus::IterationCapHit: return "iteration_cap_hit";
    }
    return "?";
}

std::string to_string(const Potential& p) {
    std::ostringstream out;
    out << '(' << p.neg_size << ',' << p.score_class << ',' << p.dist_st << ','
        << p.neg_leg_mass << ')';
    return out.str();
}

namespace {

std::string edges_str(std::span<const Edge> es) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (i) out << ' ';
        out << '(' << es[i].u << ',' << es[i].v << ')';
    }
    out << ']';
    return out.str();
}

// Degree bookkeeping for evaluating rewirings without building the tree.
struct DegreeView {
    std::vector<int> deg;   // host-indexed
    int leaves = 0;
    int branches = 0;
    int score = 0;

    static DegreeView of(const Tree& t) {
        DegreeView v;
        v.deg.assign(static_cast<std::size_t>(t.host().vertex_count()), 0);
        for (Vertex x : t.vertices()) {
            int d = t.tree_degree(x);
            v.deg[static_cast<std::size_t>(x)] = d;
            if (d == 1) ++v.leaves;
            else if (d >= 3) ++v.branches;
        }
        v.score = v.leaves + v.branches;
        return v;
    }

    // Score/branch-count of the tree after the rewiring, O(|move|).
    std::pair<int, int> after(const ExchangeMove& mv) const {
        std::array<Vertex, 16> touched{};
        std::size_t nt = 0;
        auto touch = [&](Vertex x) {
            for (std::size_t i = 0; i < nt; ++i) {
                if (touched[i] == x) return;
            }
            touched[nt++] = x;
        };
        for (const Edge& e : mv.remove) { touch(e.u); touch(e.v); }
        for (const Edge& e : mv.add) { touch(e.u); touch(e.v); }
        int d_leaves = 0, d_branches = 0;
        for (std::size_t i = 0; i < nt; ++i) {
            Vertex x = touched[i];
            int old_d = deg[static_cast<std::size_t>(x)];
            int new_d = old_d;
            for (const Edge& e : mv.remove) new_d -= (e.u == x || e.v == x);
            for (const Edge& e : mv.add) new_d += (e.u == x || e.v == x);
            d_leaves += (new_d == 1) - (old_d == 1);
            d_branches += (new_d >= 3) - (old_d >= 3);
        }
        return {score + d_leaves + d_branches, branches + d_branches};
    }
};

Potential potential_impl(const Graph& g, const Tree& t, bool relaxed) {
    (void)g;
    Potential p;
    p.neg_size = -t.size();
    if (t.size() < 2) return p;
    TreeMetrics m = metrics(t);
    p.score_class = std::max(m.score - 5, 0);
    if (m.branches.size() > 2) {
        if (!relaxed) {
            throw TreeError(TreeError::Kind::TooManyBranches,
                            "potential: tree has " + std::to_string(m.branches.size()) +
                                " branch vertices");
        }
        return p;   // distance and leg mass carry the neutral 0
    }
    BranchDecomposition d = decompose(t);
    if (d.shape == TreeShape::TwoBranch) {
        p.dist_st = static_cast<int>(d.spine.size()) + 1;
        if (t.tree_degree(*d.s) == 4 && t.tree_degree(*d.t) == 3) {
            int mass = 0;
            for (const Leg& leg : d.legs) {
                if (leg.anchor == *d.s) mass += static_cast<int>(leg.component.size());
            }
            p.neg_leg_mass = -mass;
        }
    }
    return p;
}

void validate_config(const SolverConfig& cfg) {
    if (cfg.max_swap_size < 1 || cfg.max_swap_size > 4) {
        throw std::invalid_argument("max_swap_size must be in 1..4");
    }
    if (cfg.max_iterations < 0) {
        throw std::invalid_argument("max_iterations must be positive (or 0 for default)");
    }
}

bool kind_before(const ExchangeMove& a, const ExchangeMove& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    if (a.remove != b.remove) return a.remove < b.remove;
    return a.add < b.add;
}

ExchangeMove make_move(MoveKind kind, std::vector<Edge> remove, std::vector<Edge> add) {
    std::sort(remove.begin(), remove.end());
    std::sort(add.begin(), add.end());
    return {kind, std::move(remove), std::move(add)};
}

// Targeted generators mirror the recurring rewirings of the exchange
// arguments: re-hanging a leg at a foreign leaf, pulling a leaf onto the
// spine, splitting a branch vertex along an attach-attach edge, merging two
// leaves onto one vertex, and bypassing a leg vertex whose path neighbors are
// adjacent in the host.
std::vector<ExchangeMove> targeted_moves(const Graph& g, const Tree& t,
                                         const BranchDecomposition& d) {
    std::vector<ExchangeMove> out;
    const int n = g.vertex_count();
    std::vector<int> leg_of(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < d.legs.size(); ++i) {
        for (Vertex x : d.legs[i].component) leg_of[static_cast<std::size_t>(x)] = static_cast<int>(i);
    }
    std::vector<char> on_spine(static_cast<std::size_t>(n), 0);
    for (Vertex x : d.spine) on_spine[static_cast<std::size_t>(x)] = 1;

    auto anchor_edge = [](const Leg& leg) { return make_edge(leg.anchor, leg.attach); };

    // Leg re-hang: detach leg i, reattach at x in B_i via a foreign leaf u_j.
    for (std::size_t i = 0; i < d.legs.size(); ++i) {
        for (std::size_t j = 0; j < d.legs.size(); ++j) {
            if (i == j) continue;
            Vertex uj = d.legs[j].leaf;
            for (Vertex x : g.neighbors(uj)) {
                if (leg_of[static_cast<std::size_t>(x)] == static_cast<int>(i)) {
                    out.push_back(make_move(MoveKind::LeafReattach, {anchor_edge(d.legs[i])},
                                            {make_edge(x, uj)}));
                }
            }
        }
    }

    // Spine shortening: re-hang leg i from a spine vertex adjacent to its leaf.
    if (!d.spine.empty()) {
        for (const Leg& leg : d.legs) {
            for (Vertex x : g.neighbors(leg.leaf)) {
                if (on_spine[static_cast<std::size_t>(x)]) {
                    out.push_back(make_move(MoveKind::LeafReattach, {anchor_edge(leg)},
                                            {make_edge(x, leg.leaf)}));
                }
            }
        }
    }

    // Branch split along an edge between two attach vertices of one anchor.
    for (std::size_t i = 0; i < d.legs.size(); ++i) {
        for (std::size_t j = i + 1; j < d.legs.size(); ++j) {
            const Leg& a = d.legs[i];
            const Leg& b = d.legs[j];
            if (a.anchor != b.anchor) continue;
            if (!g.adjacent(a.attach, b.attach)) continue;
            Edge bridge = make_edge(a.attach, b.attach);
            out.push_back(make_move(MoveKind::BranchMerge,
                                    {make_edge(a.anchor, a.attach)}, {bridge}));
            out.push_back(make_move(MoveKind::BranchMerge,
                                    {make_edge(b.anchor, b.attach)}, {bridge}));
        }
    }

    // Leaf pair merge: hang two foreign leaves onto one vertex.
    for (Vertex x : t.vertices()) {
        int lx = leg_of[static_cast<std::size_t>(x)];
        std::vector<std::size_t> hits;
        for (std::size_t j = 0; j < d.legs.size(); ++j) {
            if (static_cast<int>(j) == lx) continue;
            Vertex uj = d.legs[j].leaf;
            if (uj != x && g.adjacent(x, uj) && !t.has_tree_edge(x, uj)) hits.push_back(j);
        }
        for (std::size_t a = 0; a < hits.size(); ++a) {
            for (std::size_t b = a + 1; b < hits.size(); ++b) {
                const Leg& la = d.legs[hits[a]];
                const Leg& lb = d.legs[hits[b]];
                out.push_back(make_move(
                    MoveKind::TwoSwap, {anchor_edge(la), anchor_edge(lb)},
                    {make_edge(x, la.leaf), make_edge(x, lb.leaf)}));
            }
        }
    }

    // Bridge bypass: free x from leg i when its path neighbors are adjacent,
    // re-hanging a foreign leg at x and consuming a second foreign leaf.
    for (std::size_t i = 0; i < d.legs.size(); ++i) {
        const Leg& leg = d.legs[i];
        if (leg.component.size() < 2) continue;
        std::vector<Vertex> path = tree_path(t, leg.anchor, leg.leaf);
        for (std::size_t p = 1; p + 1 < path.size(); ++p) {
            Vertex x = path[p];
            Vertex before = path[p - 1];
            Vertex after = path[p + 1];
            if (!g.adjacent(before, after)) continue;
            std::vector<std::size_t> hits;
            for (std::size_t j = 0; j < d.legs.size(); ++j) {
                if (j == i) continue;
                if (g.adjacent(x, d.legs[j].leaf)) hits.push_back(j);
            }
            for (std::size_t a : hits) {
                for (std::size_t b : hits) {
                    if (a == b) continue;
                    out.push_back(make_move(
                        MoveKind::ThreeSwap,
                        {anchor_edge(d.legs[a]), make_edge(before, x), make_edge(x, after)},
                        {make_edge(x, d.legs[a].leaf), make_edge(x, d.legs[b].leaf),
                         make_edge(before, after)}));
                }
            }
        }
    }

    std::sort(out.begin(), out.end(), kind_before);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MoveKind generic_kind(int k) {
    switch (k) {
        case 1: return MoveKind::LeafReattach;
        case 2: return MoveKind::TwoSwap;
        case 3: return MoveKind::ThreeSwap;
        default: return MoveKind::FourSwap;
    }
}

// Enumerates, in lexicographic order, the k-subsets of candidate additions
// that reconnect the k+1 components into a tree.
struct AddCombiner {
    const std::vector<Edge>& cross;          // candidate adds across components
    const std::vector<int>& comp_u;          // component label of each add's u
    const std::vector<int>& comp_v;          // and of its v
    int k;
    std::vector<Edge> chosen;
    std::array<int, 5> parent{};

    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
        return x;
    }

    // Returns false when the visitor asked to stop.
    template <typename Fn>
    bool run(std::size_t idx, const Fn& emit) {
        if (static_cast<int>(chosen.size()) == k) return emit(chosen);
        if (cross.size() - idx < static_cast<std::size_t>(k) - chosen.size()) return true;
        for (std::size_t i = idx; i < cross.size(); ++i) {
            int ru = find(comp_u[i]);
            int rv = find(comp_v[i]);
            if (ru == rv) continue;
            auto saved = parent;
            parent[static_cast<std::size_t>(ru)] = rv;
            chosen.push_back(cross[i]);
            bool keep = run(i + 1, emit);
            chosen.pop_back();
            parent = saved;
            if (!keep) return false;
        }
        return true;
    }
};

}  // namespace

std::optional<ExtendStep> extend(const Graph& g, const Tree& t) {
    int best_delta = 3;
    Vertex best_v = -1, best_w = -1;
    for (Vertex v : t.vertices()) {
        int dv = t.tree_degree(v);
        int delta = t.size() == 1 ? 0 : (dv == 1 ? 0 : (dv == 2 ? 2 : 1));
        if (delta > best_delta || (delta == best_delta && v > best_v && best_v != -1)) continue;
        for (Vertex w : g.neighbors(v)) {
            if (t.contains(w)) continue;
            if (delta < best_delta || (delta == best_delta && (best_v == -1 || v < best_v ||
                                                               (v == best_v && w < best_w)))) {
                best_delta = delta;
                best_v = v;
                best_w = w;
            }
            break;   // neighbors sorted; the first outside vertex is the smallest
        }
    }
    if (best_v == -1) return std::nullopt;

    int old_score = t.size() >= 2 ? metrics(t).score : 0;
    Edge added = make_edge(best_v, best_w);
    Tree grown = apply_move(t, make_move(MoveKind::Extend, {}, {added}));
    if (t.size() >= 2) {
        int actual = metrics(grown).score - old_score;
        if (actual != best_delta || actual < 0 || actual > 2) {
            throw std::logic_error("extend: score delta " + std::to_string(actual) +
                                   " outside {0,1,2}");
        }
    }
    return ExtendStep{std::move(grown), best_delta, added};
}

void enumerate_moves(const Graph& g, const Tree& t, const SolverConfig& cfg,
                     const MoveVisitor& visit) {
    validate_config(cfg);
    if (t.size() < 2) return;

    DegreeView cur = DegreeView::of(t);
    std::vector<Edge> tree_edges = t.edges();
    std::vector<Edge> candidate_adds;
    for (const Edge& e : g.edges()) {
        if (t.contains(e.u) && t.contains(e.v) && !t.has_tree_edge(e.u, e.v)) {
            candidate_adds.push_back(e);
        }
    }
    if (candidate_adds.empty()) return;

    // Moves landing on three or more branch vertices leave the shape taxonomy
    // the exchange arguments cover; they are admitted only while the current
    // tree itself scores above 7, and then only when they lower the score.
    auto admissible = [&](const ExchangeMove& mv) {
        auto [score, branches] = cur.after(mv);
        return branches <= 2 || (cur.score > 7 && score < cur.score);
    };

    bool stopped = false;
    std::set<std::pair<std::vector<Edge>, std::vector<Edge>>> seen;
    auto yield = [&](const ExchangeMove& mv, bool record) {
        if (stopped || !admissible(mv)) return;
        if (record) {
            if (!seen.emplace(mv.remove, mv.add).second) return;
        } else if (!seen.empty() && seen.count({mv.remove, mv.add})) {
            return;
        }
        if (!visit(mv)) stopped = true;
    };

    if (cfg.use_targeted_moves && cur.branches >= 1 && cur.branches <= 2) {
        for (const ExchangeMove& mv : targeted_moves(g, t, decompose(t))) {
            yield(mv, true);
            if (stopped) return;
        }
    }

    const int kmax = std::min({cfg.max_swap_size, static_cast<int>(tree_edges.size()),
                               static_cast<int>(candidate_adds.size())});
    std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int k = 1; k <= kmax && !stopped; ++k) {
        std::vector<std::size_t> pick;
        // Lexicographic combinations of removed tree edges.
        auto recurse = [&](auto&& self, std::size_t from) -> void {
            if (stopped) return;
            if (static_cast<int>(pick.size()) == k) {
                // Label the k+1 components of T minus the removed edges.
                std::vector<Edge> removed;
                removed.reserve(pick.size());
                for (std::size_t idx : pick) removed.push_back(tree_edges[idx]);
                for (Vertex v : t.vertices()) comp[static_cast<std::size_t>(v)] = -1;
                int labels = 0;
                for (Vertex v : t.vertices()) {
                    if (comp[static_cast<std::size_t>(v)] != -1) continue;
                    std::vector<Vertex> stack{v};
                    comp[static_cast<std::size_t>(v)] = labels;
                    while (!stack.empty()) {
                        Vertex x = stack.back();
                        stack.pop_back();
                        for (Vertex w : t.tree_neighbors(x)) {
                            Edge e = make_edge(x, w);
                            if (std::binary_search(removed.begin(), removed.end(), e)) continue;
                            if (comp[static_cast<std::size_t>(w)] == -1) {
                                comp[static_cast<std::size_t>(w)] = labels;
                                stack.push_back(w);
                            }
                        }
                    }
                    ++labels;
                }
                std::vector<Edge> cross;
                std::vector<int> cu, cv;
                for (const Edge& e : candidate_adds) {
                    int a = comp[static_cast<std::size_t>(e.u)];
                    int b = comp[static_cast<std::size_t>(e.v)];
                    if (a != b) {
                        cross.push_back(e);
                        cu.push_back(a);
                        cv.push_back(b);
                    }
                }
                if (static_cast<int>(cross.size()) < k) return;
                AddCombiner combiner{cross, cu, cv, k, {}, {}};
                for (int i = 0; i <= k; ++i) combiner.parent[static_cast<std::size_t>(i)] = i;
                combiner.run(0, [&](const std::vector<Edge>& adds) {
                    yield(make_move(generic_kind(k), removed, adds), false);
                    return !stopped;
                });
                return;
            }
            for (std::size_t i = from; i < tree_edges.size() && !stopped; ++i) {
                pick.push_back(i);
                self(self, i + 1);
                pick.pop_back();
            }
        };
        recurse(recurse, 0);
    }
}

Tree apply_move(const Tree& t, const ExchangeMove& mv) {
    if (mv.kind == MoveKind::Extend) {
        if (!mv.remove.empty() || mv.add.size() != 1) {
            throw std::invalid_argument("Extend moves add exactly one edge and remove none");
        }
        const Edge& e = mv.add.front();
        bool u_in = t.contains(e.u), v_in = t.contains(e.v);
        if (u_in == v_in) {
            throw std::invalid_argument("Extend edge " + edges_str(mv.add) +
                                        " must join the tree to one new vertex");
        }
    } else {
        if (mv.remove.empty() || mv.remove.size() != mv.add.size() || mv.remove.size() > 4) {
            throw std::invalid_argument("rewiring needs |remove| = |add| in 1..4, got " +
                                        edges_str(mv.remove) + " / " + edges_str(mv.add));
        }
    }
    std::vector<Edge> edges = t.edges();
    for (const Edge& r : mv.remove) {
        Edge e = make_edge(r.u, r.v);
        auto it = std::find(edges.begin(), edges.end(), e);
        if (it == edges.end()) {
            throw std::invalid_argument("removed edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") is not a tree edge");
        }
        edges.erase(it);
    }
    for (const Edge& a : mv.add) {
        Edge e = make_edge(a.u, a.v);
        if (t.has_tree_edge(e.u, e.v)) {
            throw std::invalid_argument("added edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") is already a tree edge");
        }
        edges.push_back(e);
    }
    Tree result = Tree::build(t.host(), edges);
    int expected = t.size() + (mv.kind == MoveKind::Extend ? 1 : 0);
    if (result.size() != expected) {
        throw TreeError(TreeError::Kind::NotATree,
                        "move " + edges_str(mv.remove) + " -> " + edges_str(mv.add) +
                            " changed the vertex set");
    }
    return result;
}

Potential potential_of(const Graph& g, const Tree& t) {
    return potential_impl(g, t, /*relaxed=*/false);
}

std::string format_trace(const SolveResult& r) {
    std::ostringstream out;
    for (const TraceEntry& e : r.trace) {
        out << e.iteration << ' ' << to_string(e.kind) << " remove=" << edges_str(e.removed)
            << " add=" << edges_str(e.added) << " potential=" << to_string(e.after) << '\n';
    }
    return out.str();
}

SolveResult solve(const Graph& g, const SolverConfig& cfg) {
    validate_config(cfg);
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("solve requires a non-empty graph");
    if (!g.is_connected()) throw DisconnectedError("solve requires a connected graph");

    if (n == 1) {
        return {SolveStatus::Solved, Tree::single_vertex(g, 0), 0, 0, {}};
    }

    Vertex start = static_cast<Vertex>(cfg.seed % static_cast<std::uint64_t>(n));
    Tree tree = Tree::spanning_dfs(g, start);
    const long max_iters = cfg.max_iterations > 0 ? cfg.max_iterations
                                                  : 10L * static_cast<long>(n) * n;
    SolveResult result;
    result.tree = tree;
    long iter = 0;

    auto record = [&](MoveKind kind, std::vector<Edge> removed, std::vector<Edge> added,
                      const Potential& after) {
        if (cfg.keep_trace) {
            result.trace.push_back({iter, kind, std::move(removed), std::move(added), after});
        }
    };

    while (true) {
        if (!tree.spanning()) {
            // Unreachable from a DFS seed on a connected host; kept so the
            // loop stays sound if seeded differently.
            auto step = extend(g, tree);
            if (!step) {
                result.status = SolveStatus::StuckNotSpanning;
                break;
            }
            ++iter;
            Edge added = step->added;
            tree = std::move(step->tree);
            record(MoveKind::Extend, {}, {added}, potential_impl(g, tree, true));
            continue;
        }
        int score = metrics(tree).score;
        if (score <= 5) {
            result.status = SolveStatus::Solved;
            break;
        }
        if (iter >= max_iters) {
            result.status = SolveStatus::IterationCapHit;
            break;
        }
        Potential cur = potential_impl(g, tree, true);
        DegreeView view = DegreeView::of(tree);
        std::optional<ExchangeMove> chosen;
        Tree next = tree;
        enumerate_moves(g, tree, cfg, [&](const ExchangeMove& mv) {
            int cls = std::max(view.after(mv).first - 5, 0);
            if (cls > cur.score_class) return true;
            Tree cand = apply_move(tree, mv);
            Potential p = potential_impl(g, cand, true);
            if (p < cur) {
                chosen = mv;
                next = std::move(cand);
                return false;
            }
            return true;
        });
        if (!chosen) {
            result.status = SolveStatus::StuckAtScore;
            break;
        }
        ++iter;
        tree = std::move(next);
        record(chosen->kind, chosen->remove, chosen->add, potential_impl(g, tree, true));
    }

    result.tree = tree;
    result.score = tree.size() >= 2 ? metrics(tree).score : 0;
    result.iterations = iter;
    return result;
}

}  // namespace fewleaf
