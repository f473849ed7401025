#include "fewleaf/campaign.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "fewleaf/oracle.hpp"

namespace fewleaf {

namespace {

long elapsed_ms(std::chrono::steady_clock::time_point from) {
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - from)
                                 .count());
}

nlohmann::json edges_to_json(const std::vector<Edge>& edges) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Edge& e : edges) arr.push_back({e.u, e.v});
    return arr;
}

}  // namespace

nlohmann::json CampaignConfig::to_json() const {
    nlohmann::json j;
    j["schema"] = kReportSchema;
    j["oracle_cutoff"] = oracle_cutoff;
    j["solver"] = {{"max_swap_size", max_swap_size},
                   {"max_iterations", max_iterations},
                   {"use_targeted_moves", use_targeted_moves}};
    nlohmann::json arr = nlohmann::json::array();
    for (const FamilySpec& spec : instances) arr.push_back(spec.to_json());
    j["instances"] = arr;
    return j;
}

CampaignConfig CampaignConfig::from_json(const nlohmann::json& j) {
    CampaignConfig cfg;
    if (j.value("schema", kReportSchema) != kReportSchema) {
        throw ConfigError("unsupported config schema");
    }
    cfg.oracle_cutoff = j.value("oracle_cutoff", 9);
    if (j.contains("solver")) {
        const auto& s = j.at("solver");
        cfg.max_swap_size = s.value("max_swap_size", 4);
        cfg.max_iterations = s.value("max_iterations", 0L);
        cfg.use_targeted_moves = s.value("use_targeted_moves", true);
    }
    if (!j.contains("instances") || !j.at("instances").is_array()) {
        throw ConfigError("config needs an 'instances' array");
    }
    for (const auto& item : j.at("instances")) {
        FamilySpec spec = FamilySpec::from_json(item);
        int count = item.value("count", 1);
        if (count < 1) throw ConfigError("instance count must be >= 1");
        // A count-N entry expands into N instances with consecutive seeds.
        for (int i = 0; i < count; ++i) {
            FamilySpec expanded = spec;
            expanded.seed = spec.seed + static_cast<std::uint64_t>(i);
            cfg.instances.push_back(expanded);
        }
    }
    return cfg;
}

CampaignConfig CampaignConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
    try {
        return from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config field error: ") + e.what());
    }
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
    CampaignReport report;
    report.config = cfg;
    report.aggregate.instances = static_cast<int>(cfg.instances.size());

    int id = 0;
    for (const FamilySpec& spec : cfg.instances) {
        InstanceRecord rec;
        rec.id = id++;
        rec.spec = spec;

        auto t0 = std::chrono::steady_clock::now();
        Graph g;
        try {
            g = generate(spec);
        } catch (const std::exception& e) {
            rec.error = e.what();
            rec.timings.generate_ms = elapsed_ms(t0);
            ++report.aggregate.errored;
            report.records.push_back(std::move(rec));
            continue;
        }
        rec.timings.generate_ms = elapsed_ms(t0);
        rec.n = g.vertex_count();
        rec.m_edges = g.edge_count();

        t0 = std::chrono::steady_clock::now();
        rec.hypotheses = check_hypotheses(g);
        rec.timings.check_ms = elapsed_ms(t0);

        t0 = std::chrono::steady_clock::now();
        SolverConfig solver_cfg;
        solver_cfg.max_swap_size = cfg.max_swap_size;
        solver_cfg.max_iterations = cfg.max_iterations;
        solver_cfg.use_targeted_moves = cfg.use_targeted_moves;
        solver_cfg.seed = spec.seed;
        SolveResult solved = solve(g, solver_cfg);
        rec.timings.solve_ms = elapsed_ms(t0);
        rec.solver_status = solved.status;
        rec.solver_score = solved.score;
        rec.solver_iterations = solved.iterations;
        rec.solver_branches =
            solved.tree.size() >= 2 ? static_cast<int>(metrics(solved.tree).branches.size()) : 0;

        if (g.vertex_count() <= cfg.oracle_cutoff) {
            t0 = std::chrono::steady_clock::now();
            OracleOptions opts;
            opts.target_score = 5;
            OracleResult oracle = min_score(g, opts);
            rec.timings.oracle_ms = elapsed_ms(t0);
            rec.oracle = OracleSummary{oracle.min_score, oracle.trees_enumerated,
                                       oracle.feasible_le5};
            ++report.aggregate.oracle_runs;
            if (oracle.feasible_le5 == (solved.status == SolveStatus::Solved)) {
                ++report.aggregate.oracle_agreements;
            }
        }

        bool hypo = rec.hypotheses.all_pass();
        if (!hypo) {
            ++report.aggregate.hypothesis_failed;
        } else if (solved.status == SolveStatus::Solved) {
            ++report.aggregate.solved;
        } else if (solved.status == SolveStatus::IterationCapHit) {
            ++report.aggregate.cap_hit;
        } else {
            ++report.aggregate.stuck;
        }
        rec.critical = hypo && (solved.status == SolveStatus::StuckAtScore ||
                                solved.status == SolveStatus::StuckNotSpanning);
        if (rec.critical) {
            rec.edges = g.edges();
            ++report.aggregate.critical;
        }
        report.records.push_back(std::move(rec));
    }
    return report;
}

nlohmann::json hypotheses_to_json(const HypothesisReport& rep) {
    nlohmann::json j;
    j["connected"] = rep.connected;
    j["k15_free"] = rep.k15_free;
    if (rep.sigma4.has_value()) j["sigma4"] = *rep.sigma4;
    else j["sigma4"] = nullptr;   // +infinity
    j["sigma4_ok"] = rep.sigma4_ok;
    j["witness_star"] = rep.witness_star.empty() ? nlohmann::json(nullptr)
                                                 : nlohmann::json(rep.witness_star);
    j["witness_set"] = rep.witness_set.empty() ? nlohmann::json(nullptr)
                                               : nlohmann::json(rep.witness_set);
    j["all_pass"] = rep.all_pass();
    return j;
}

nlohmann::json report_to_json(const CampaignReport& report, bool include_timings) {
    nlohmann::json j;
    j["schema"] = kReportSchema;
    j["oracle_cutoff"] = report.config.oracle_cutoff;
    const CampaignAggregate& agg = report.aggregate;
    j["aggregate"] = {{"instances", agg.instances},
                      {"solved", agg.solved},
                      {"stuck", agg.stuck},
                      {"cap_hit", agg.cap_hit},
                      {"hypothesis_failed", agg.hypothesis_failed},
                      {"errored", agg.errored},
                      {"critical", agg.critical},
                      {"oracle_runs", agg.oracle_runs},
                      {"oracle_agreements", agg.oracle_agreements}};
    nlohmann::json records = nlohmann::json::array();
    for (const InstanceRecord& rec : report.records) {
        nlohmann::json r;
        r["id"] = rec.id;
        r["family"] = rec.spec.to_json();
        if (rec.error) {
            r["error"] = *rec.error;
        } else {
            r["n"] = rec.n;
            r["m_edges"] = rec.m_edges;
            r["hypotheses"] = hypotheses_to_json(rec.hypotheses);
            r["solver"] = {{"status", to_string(rec.solver_status)},
                           {"score", rec.solver_score},
                           {"iterations", rec.solver_iterations},
                           {"branches", rec.solver_branches}};
            if (rec.oracle) {
                r["oracle"] = {{"min_score", rec.oracle->min_score},
                               {"trees_enumerated", rec.oracle->trees_enumerated},
                               {"feasible_le5", rec.oracle->feasible_le5}};
            } else {
                r["oracle"] = nullptr;
            }
            r["critical"] = rec.critical;
            if (rec.critical) r["edges"] = edges_to_json(rec.edges);
        }
        if (include_timings) {
            r["timings_ms"] = {{"generate", rec.timings.generate_ms},
                               {"check", rec.timings.check_ms},
                               {"solve", rec.timings.solve_ms},
                               {"oracle", rec.timings.oracle_ms}};
        }
        records.push_back(std::move(r));
    }
    j["instances"] = std::move(records);
    return j;
}

std::string summarize(const CampaignReport& report) {
    const CampaignAggregate& a = report.aggregate;
    std::ostringstream out;
    out << "instances=" << a.instances << " solved=" << a.solved << " stuck=" << a.stuck
        << " cap_hit=" << a.cap_hit << " hypothesis_failed=" << a.hypothesis_failed
        << " errored=" << a.errored << " critical=" << a.critical
        << " oracle_runs=" << a.oracle_runs << " oracle_agreements=" << a.oracle_agreements;
    return out.str();
}

bool campaign_ok(const CampaignReport& report) {
    return report.aggregate.critical == 0 && report.aggregate.cap_hit == 0;
}

}  // namespace fewleaf
