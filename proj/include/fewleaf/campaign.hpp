#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fewleaf/exchange.hpp"
#include "fewleaf/families.hpp"
#include "fewleaf/structural.hpp"

namespace fewleaf {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kReportSchema = 1;

struct CampaignConfig {
    int oracle_cutoff = 9;          // run the oracle for instances with n <= cutoff
    int max_swap_size = 4;
    long max_iterations = 0;        // 0 = solver default
    bool use_targeted_moves = true;
    std::vector<FamilySpec> instances;   // one entry per instance (counts expanded)

    nlohmann::json to_json() const;
    static CampaignConfig from_json(const nlohmann::json& j);
    static CampaignConfig load(const std::string& path);
};

struct OracleSummary {
    int min_score = 0;
    long long trees_enumerated = 0;
    bool feasible_le5 = false;
};

struct PhaseTimings {
    long generate_ms = 0;
    long check_ms = 0;
    long solve_ms = 0;
    long oracle_ms = 0;
};

struct InstanceRecord {
    int id = 0;
    FamilySpec spec;
    std::optional<std::string> error;    // generation failure; rest of record empty
    int n = 0;
    long m_edges = 0;
    HypothesisReport hypotheses;
    SolveStatus solver_status = SolveStatus::Solved;
    int solver_score = 0;
    long solver_iterations = 0;
    int solver_branches = 0;             // |B| of the returned tree
    std::optional<OracleSummary> oracle;
    bool critical = false;               // hypothesis-passing yet stuck
    std::vector<Edge> edges;             // embedded for critical records only
    PhaseTimings timings;
};

struct CampaignAggregate {
    int instances = 0;
    int solved = 0;
    int stuck = 0;
    int cap_hit = 0;
    int hypothesis_failed = 0;
    int errored = 0;
    int critical = 0;
    int oracle_runs = 0;
    int oracle_agreements = 0;   // oracle feasibility == solver Solved
};

struct CampaignReport {
    CampaignConfig config;
    std::vector<InstanceRecord> records;
    CampaignAggregate aggregate;
};

/// Runs generate -> check -> solve (-> oracle when n <= cutoff) per instance.
/// Per-instance errors are recorded, not fatal. Records keep config order.
CampaignReport run_campaign(const CampaignConfig& cfg);

nlohmann::json hypotheses_to_json(const HypothesisReport& rep);
nlohmann::json report_to_json(const CampaignReport& report, bool include_timings);
std::string summarize(const CampaignReport& report);

/// Exit contract of the validate command: success means no critical records
/// and no iteration-cap hits.
bool campaign_ok(const CampaignReport& report);

}  // namespace fewleaf
