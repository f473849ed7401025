#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fewleaf/campaign.hpp"
#include "fewleaf/exchange.hpp"
#include "fewleaf/families.hpp"
#include "fewleaf/oracle.hpp"
#include "fewleaf/structural.hpp"

namespace {

// Exit codes: 0 pass, 1 semantic fail (hypotheses/solve/oracle verdict),
// 2 parse or config error, 3 size/enumeration cap, 4 disconnected input.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;
constexpr int kExitDisconnected = 4;

using fewleaf::Graph;

int cmd_check(const std::string& input) {
    Graph g = fewleaf::load_edge_list(input);
    fewleaf::HypothesisReport rep = fewleaf::check_hypotheses(g);
    nlohmann::json j = fewleaf::hypotheses_to_json(rep);
    j["schema"] = fewleaf::kReportSchema;
    j["n"] = g.vertex_count();
    j["m_edges"] = g.edge_count();
    std::cout << j.dump(2) << '\n';
    return rep.all_pass() ? kExitPass : kExitFail;
}

int cmd_solve(const std::string& input, const fewleaf::SolverConfig& cfg,
              const std::string& dot_path) {
    Graph g = fewleaf::load_edge_list(input);
    fewleaf::SolveResult res = fewleaf::solve(g, cfg);
    nlohmann::json j;
    j["schema"] = fewleaf::kReportSchema;
    j["status"] = fewleaf::to_string(res.status);
    j["score"] = res.score;
    j["iterations"] = res.iterations;
    j["spanning"] = res.tree.spanning();
    if (res.tree.size() >= 2) {
        fewleaf::TreeMetrics m = fewleaf::metrics(res.tree);
        j["leaves"] = m.leaves.size();
        j["branches"] = m.branches.size();
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const fewleaf::Edge& e : res.tree.edges()) edges.push_back({e.u, e.v});
    j["tree_edges"] = edges;
    if (cfg.keep_trace) {
        nlohmann::json trace = nlohmann::json::array();
        std::istringstream lines(fewleaf::format_trace(res));
        for (std::string line; std::getline(lines, line);) trace.push_back(line);
        j["trace"] = trace;
    }
    std::cout << j.dump(2) << '\n';
    if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) throw fewleaf::ParseError("cannot write '" + dot_path + "'");
        fewleaf::write_dot_overlay(res.tree, out);
    }
    return res.status == fewleaf::SolveStatus::Solved ? kExitPass : kExitFail;
}

int cmd_oracle(const std::string& input, long long tree_cap, int target) {
    Graph g = fewleaf::load_edge_list(input);
    fewleaf::OracleOptions opts;
    opts.tree_cap = tree_cap;
    opts.target_score = target;
    fewleaf::OracleResult res = fewleaf::min_score(g, opts);
    nlohmann::json j;
    j["schema"] = fewleaf::kReportSchema;
    j["min_score"] = res.min_score;
    j["trees_enumerated"] = res.trees_enumerated;
    j["feasible_le5"] = res.feasible_le5;
    nlohmann::json edges = nlohmann::json::array();
    for (const fewleaf::Edge& e : res.witness.edges()) edges.push_back({e.u, e.v});
    j["witness_edges"] = edges;
    std::cout << j.dump(2) << '\n';
    return res.feasible_le5 ? kExitPass : kExitFail;
}

int cmd_validate(const std::string& config_path, const std::string& output,
                 bool no_timing, int oracle_cutoff_override) {
    fewleaf::CampaignConfig cfg = fewleaf::CampaignConfig::load(config_path);
    if (oracle_cutoff_override >= 0) cfg.oracle_cutoff = oracle_cutoff_override;
    fewleaf::CampaignReport report = fewleaf::run_campaign(cfg);
    nlohmann::json j = fewleaf::report_to_json(report, !no_timing);
    if (output.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream out(output);
        if (!out) throw fewleaf::ConfigError("cannot write '" + output + "'");
        out << j.dump(2) << '\n';
        std::cout << fewleaf::summarize(report) << '\n';
    }
    return fewleaf::campaign_ok(report) ? kExitPass : kExitFail;
}

int run(int argc, char** argv) {
    CLI::App app{"spanning trees with few leaves and branch vertices"};
    app.require_subcommand(1);

    std::string input, output, dot_path, config_path;

    auto* check = app.add_subcommand("check", "test connectivity, K_{1,5}-freeness, sigma_4");
    check->add_option("--input", input, "edge-list file")->required();

    auto* solve = app.add_subcommand("solve", "search for a spanning tree of score <= 5");
    fewleaf::SolverConfig solver_cfg;
    solve->add_option("--input", input, "edge-list file")->required();
    solve->add_option("--seed", solver_cfg.seed, "seed for the start vertex");
    solve->add_option("--max-swap", solver_cfg.max_swap_size, "largest exchange size (1..4)");
    solve->add_option("--max-iters", solver_cfg.max_iterations, "iteration cap (0 = 10*n^2)");
    solve->add_flag_callback("--no-targeted",
                             [&] { solver_cfg.use_targeted_moves = false; },
                             "disable the targeted move generators");
    solve->add_flag("--trace", solver_cfg.keep_trace, "record accepted moves");
    solve->add_option("--dot", dot_path, "write the witness tree as DOT overlay");

    auto* oracle = app.add_subcommand("oracle", "exact minimum score over all spanning trees");
    long long tree_cap = fewleaf::kDefaultTreeCap;
    int target = 2;
    oracle->add_option("--input", input, "edge-list file")->required();
    oracle->add_option("--tree-cap", tree_cap, "abort beyond this many trees");
    oracle->add_option("--target", target, "stop once a tree at or below this score is found");

    auto* validate = app.add_subcommand("validate", "run a campaign from a JSON config");
    bool no_timing = false;
    int oracle_cutoff_override = -1;
    validate->add_option("--config", config_path, "campaign config JSON")->required();
    validate->add_option("--output", output, "report file (default: stdout)");
    validate->add_flag("--no-timing", no_timing, "omit timings for byte-stable reports");
    validate->add_option("--oracle-cutoff", oracle_cutoff_override,
                         "override the config's oracle size cutoff");

    auto* gen = app.add_subcommand("gen", "write an instance as an edge list");
    gen->require_subcommand(1);
    int m = 1, n = 7, n2 = 0, base_n = 8, chain_len = 3, clique_size = 4;
    int p_num = 1, p_den = 2;
    std::uint64_t seed = 0;
    std::string classic_kind = "path";

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", output, "output edge-list file (default: stdout)");
        sub->add_option("--dot", dot_path, "also write a DOT rendering");
    };
    auto* g_sharp = gen->add_subcommand("sharpness", "four cliques joined through x and y");
    g_sharp->add_option("--m", m, "clique size")->required();
    add_output(g_sharp);
    auto* g_random = gen->add_subcommand("random", "rejection-sampled hypothesis-passing G(n,p)");
    g_random->add_option("--n", n, "order")->required();
    g_random->add_option("--p-num", p_num, "edge probability numerator");
    g_random->add_option("--p-den", p_den, "edge probability denominator");
    g_random->add_option("--seed", seed, "generator seed");
    add_output(g_random);
    auto* g_line = gen->add_subcommand("linegraph", "line graph of a random connected base");
    g_line->add_option("--base-n", base_n, "base graph order")->required();
    g_line->add_option("--p-num", p_num, "base edge probability numerator");
    g_line->add_option("--p-den", p_den, "base edge probability denominator");
    g_line->add_option("--seed", seed, "generator seed");
    add_output(g_line);
    auto* g_chain = gen->add_subcommand("cliquechain", "cliques chained through cut vertices");
    g_chain->add_option("--len", chain_len, "number of cliques")->required();
    g_chain->add_option("--size", clique_size, "clique order")->required();
    add_output(g_chain);
    auto* g_classic = gen->add_subcommand("classic", "path / cycle / complete / bipartite");
    g_classic->add_option("--kind", classic_kind, "path|cycle|complete|complete_bipartite")
        ->required();
    g_classic->add_option("--n", n, "order (first side for bipartite)")->required();
    g_classic->add_option("--n2", n2, "second side for bipartite");
    add_output(g_classic);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(input);
        if (solve->parsed()) return cmd_solve(input, solver_cfg, dot_path);
        if (oracle->parsed()) return cmd_oracle(input, tree_cap, target);
        if (validate->parsed()) {
            return cmd_validate(config_path, output, no_timing, oracle_cutoff_override);
        }
        if (gen->parsed()) {
            fewleaf::FamilySpec spec;
            if (g_sharp->parsed()) {
                spec.family = fewleaf::Family::Sharpness;
                spec.m = m;
            } else if (g_random->parsed()) {
                spec.family = fewleaf::Family::RandomRejection;
                spec.n = n;
                spec.p_num = p_num;
                spec.p_den = p_den;
                spec.seed = seed;
            } else if (g_line->parsed()) {
                spec.family = fewleaf::Family::LineGraph;
                spec.base_n = base_n;
                spec.p_num = p_num;
                spec.p_den = p_den;
                spec.seed = seed;
            } else if (g_chain->parsed()) {
                spec.family = fewleaf::Family::CliqueChain;
                spec.chain_len = chain_len;
                spec.clique_size = clique_size;
            } else {
                spec.family = fewleaf::Family::Classic;
                spec.kind = fewleaf::classic_kind_from_string(classic_kind);
                spec.n = n;
                spec.n2 = n2;
            }
            Graph g = fewleaf::generate(spec);
            if (output.empty()) {
                fewleaf::write_edge_list(g, std::cout);
            } else {
                fewleaf::save_edge_list(g, output);
            }
            if (!dot_path.empty()) {
                std::ofstream out(dot_path);
                if (!out) throw fewleaf::ParseError("cannot write '" + dot_path + "'");
                fewleaf::write_dot(g, out);
            }
            return kExitPass;
        }
    } catch (const fewleaf::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const fewleaf::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const fewleaf::GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const fewleaf::SizeCapError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const fewleaf::EnumerationCapError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const fewleaf::GenerateError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const fewleaf::DisconnectedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDisconnected;
    }
    return kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 10;
    }
}
