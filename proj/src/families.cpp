#include "fewleaf/families.hpp"

#include <algorithm>
#include <map>

#include "fewleaf/structural.hpp"

namespace fewleaf {

const char* to_string(Family f) {
    switch (f) {
        case Family::Sharpness: return "sharpness";
        case Family::RandomRejection: return "random_rejection";
        case Family::LineGraph: return "line_graph";
        case Family::CliqueChain: return "clique_chain";
        case Family::Classic: return "classic";
    }
    return "?";
}

const char* to_string(ClassicKind k) {
    switch (k) {
        case ClassicKind::Path: return "path";
        case ClassicKind::Cycle: return "cycle";
        case ClassicKind::Complete: return "complete";
        case ClassicKind::CompleteBipartite: return "complete_bipartite";
    }
    return "?";
}

Family family_from_string(const std::string& s) {
    static const std::map<std::string, Family> table{
        {"sharpness", Family::Sharpness},
        {"random_rejection", Family::RandomRejection},
        {"line_graph", Family::LineGraph},
        {"clique_chain", Family::CliqueChain},
        {"classic", Family::Classic},
    };
    auto it = table.find(s);
    if (it == table.end()) throw GenerateError("unknown family '" + s + "'");
    return it->second;
}

ClassicKind classic_kind_from_string(const std::string& s) {
    static const std::map<std::string, ClassicKind> table{
        {"path", ClassicKind::Path},
        {"cycle", ClassicKind::Cycle},
        {"complete", ClassicKind::Complete},
        {"complete_bipartite", ClassicKind::CompleteBipartite},
    };
    auto it = table.find(s);
    if (it == table.end()) throw GenerateError("unknown classic kind '" + s + "'");
    return it->second;
}

nlohmann::json FamilySpec::to_json() const {
    nlohmann::json j;
    j["family"] = to_string(family);
    j["seed"] = seed;
    switch (family) {
        case Family::Sharpness:
            j["m"] = m;
            break;
        case Family::RandomRejection:
            j["n"] = n;
            j["p_num"] = p_num;
            j["p_den"] = p_den;
            break;
        case Family::LineGraph:
            j["base_n"] = base_n;
            j["p_num"] = p_num;
            j["p_den"] = p_den;
            j["min_n"] = min_n;
            j["max_n"] = max_n;
            break;
        case Family::CliqueChain:
            j["chain_len"] = chain_len;
            j["clique_size"] = clique_size;
            break;
        case Family::Classic:
            j["kind"] = to_string(kind);
            j["n"] = n;
            if (kind == ClassicKind::CompleteBipartite) j["n2"] = n2;
            break;
    }
    return j;
}

FamilySpec FamilySpec::from_json(const nlohmann::json& j) {
    FamilySpec spec;
    spec.family = family_from_string(j.at("family").get<std::string>());
    spec.seed = j.value("seed", std::uint64_t{0});
    spec.m = j.value("m", 1);
    spec.n = j.value("n", 0);
    spec.p_num = j.value("p_num", 1);
    spec.p_den = j.value("p_den", 2);
    spec.base_n = j.value("base_n", 0);
    spec.chain_len = j.value("chain_len", 0);
    spec.clique_size = j.value("clique_size", 0);
    spec.min_n = j.value("min_n", 5);
    spec.max_n = j.value("max_n", 40);
    spec.max_retries = j.value("max_retries", 1000);
    if (spec.family == Family::Classic) {
        spec.kind = classic_kind_from_string(j.value("kind", std::string("path")));
        spec.n2 = j.value("n2", 0);
    }
    return spec;
}

Graph sharpness_graph(int m) {
    if (m < 1) throw GenerateError("sharpness_graph requires m >= 1");
    const int n = 4 * m + 2;
    const Vertex x = 4 * m;
    const Vertex y = 4 * m + 1;
    std::vector<Edge> edges;
    for (int block = 0; block < 4; ++block) {
        int lo = block * m;
        for (int a = lo; a < lo + m; ++a) {
            for (int b = a + 1; b < lo + m; ++b) edges.push_back({a, b});
        }
    }
    for (int v = 0; v < 2 * m; ++v) edges.push_back(make_edge(x, v));
    for (int v = 2 * m; v < 4 * m; ++v) edges.push_back(make_edge(y, v));
    edges.push_back({x, y});
    return Graph::build(n, edges);
}

Graph classic_graph(ClassicKind kind, int n, int n2) {
    std::vector<Edge> edges;
    switch (kind) {
        case ClassicKind::Path:
            if (n < 1) throw GenerateError("path requires n >= 1");
            for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
            return Graph::build(n, edges);
        case ClassicKind::Cycle:
            if (n < 3) throw GenerateError("cycle requires n >= 3");
            for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
            edges.push_back({0, n - 1});
            return Graph::build(n, edges);
        case ClassicKind::Complete:
            if (n < 1) throw GenerateError("complete requires n >= 1");
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
            }
            return Graph::build(n, edges);
        case ClassicKind::CompleteBipartite:
            if (n < 1 || n2 < 1) throw GenerateError("bipartite requires both sides >= 1");
            for (int u = 0; u < n; ++u) {
                for (int v = 0; v < n2; ++v) edges.push_back({u, n + v});
            }
            return Graph::build(n + n2, edges);
    }
    throw GenerateError("unhandled classic kind");
}

Graph clique_chain(int chain_len, int clique_size) {
    if (chain_len < 1) throw GenerateError("clique_chain requires chain_len >= 1");
    if (clique_size < 2) throw GenerateError("clique_chain requires clique_size >= 2");
    // Consecutive cliques overlap in one cut vertex.
    const int n = chain_len * (clique_size - 1) + 1;
    std::vector<Edge> edges;
    for (int c = 0; c < chain_len; ++c) {
        int lo = c * (clique_size - 1);
        for (int a = lo; a < lo + clique_size; ++a) {
            for (int b = a + 1; b < lo + clique_size; ++b) edges.push_back({a, b});
        }
    }
    return Graph::build(n, edges);
}

Graph line_graph(const Graph& base) {
    std::vector<Edge> base_edges = base.edges();
    const int n = static_cast<int>(base_edges.size());
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Edge& a = base_edges[static_cast<std::size_t>(i)];
            const Edge& b = base_edges[static_cast<std::size_t>(j)];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) edges.push_back({i, j});
        }
    }
    return Graph::build(n, edges);
}

Graph random_graph(int n, int p_num, int p_den, Rng& rng) {
    if (n < 1) throw GenerateError("random_graph requires n >= 1");
    if (p_den < 1 || p_num < 0 || p_num > p_den) {
        throw GenerateError("edge probability must satisfy 0 <= p_num/p_den <= 1");
    }
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.chance(p_num, p_den)) edges.push_back({u, v});
        }
    }
    return Graph::build(n, edges);
}

namespace {

Graph verified(Graph g, const char* family) {
    HypothesisReport rep = check_hypotheses(g);
    if (!rep.all_pass()) {
        throw GenerateError(std::string(family) +
                            " generator produced a hypothesis-failing graph");
    }
    return g;
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Sharpness:
            return sharpness_graph(spec.m);
        case Family::Classic:
            return classic_graph(spec.kind, spec.n, spec.n2);
        case Family::CliqueChain:
            // Deterministic; still re-verified rather than trusted.
            return verified(clique_chain(spec.chain_len, spec.clique_size), "clique_chain");
        case Family::RandomRejection: {
            Rng rng(spec.seed);
            for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
                Graph g = random_graph(spec.n, spec.p_num, spec.p_den, rng);
                if (check_hypotheses(g).all_pass()) return g;
            }
            throw GenerateError("random_rejection: retry budget exhausted at n=" +
                                std::to_string(spec.n) + ", p=" + std::to_string(spec.p_num) +
                                "/" + std::to_string(spec.p_den));
        }
        case Family::LineGraph: {
            if (spec.base_n < 2) throw GenerateError("line_graph requires base_n >= 2");
            Rng rng(spec.seed);
            for (int attempt = 0; attempt < spec.max_retries; ++attempt) {
                Graph base = random_graph(spec.base_n, spec.p_num, spec.p_den, rng);
                if (base.edge_count() < 1 || !base.is_connected()) continue;
                Graph lg = line_graph(base);
                if (lg.vertex_count() < spec.min_n || lg.vertex_count() > spec.max_n) continue;
                if (check_hypotheses(lg).all_pass()) return lg;
            }
            throw GenerateError("line_graph: retry budget exhausted at base_n=" +
                                std::to_string(spec.base_n));
        }
    }
    throw GenerateError("unhandled family");
}

}  // namespace fewleaf
