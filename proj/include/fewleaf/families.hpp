#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "fewleaf/graph.hpp"
#include "fewleaf/rng.hpp"

namespace fewleaf {

class GenerateError : public std::runtime_error {
public:
    explicit GenerateError(const std::string& what) : std::runtime_error(what) {}
};

enum class Family { Sharpness, RandomRejection, LineGraph, CliqueChain, Classic };
enum class ClassicKind { Path, Cycle, Complete, CompleteBipartite };

const char* to_string(Family f);
const char* to_string(ClassicKind k);
Family family_from_string(const std::string& s);
ClassicKind classic_kind_from_string(const std::string& s);

struct FamilySpec {
    Family family = Family::Classic;

    int m = 1;                      // Sharpness clique size
    int n = 0;                      // RandomRejection / Classic order
    int p_num = 1, p_den = 2;       // edge probability for random families
    int base_n = 0;                 // LineGraph base order
    int chain_len = 0;              // CliqueChain cliques
    int clique_size = 0;            // CliqueChain clique order
    ClassicKind kind = ClassicKind::Path;
    int n2 = 0;                     // CompleteBipartite second side
    int min_n = 5, max_n = 40;      // accepted order window for LineGraph
    std::uint64_t seed = 0;
    int max_retries = 1000;

    nlohmann::json to_json() const;
    static FamilySpec from_json(const nlohmann::json& j);
};

/// Four disjoint m-cliques D_1..D_4, a vertex x joined to D_1 and D_2, a
/// vertex y joined to D_3 and D_4, and the edge xy. Fixed layout:
/// D_i occupies (i-1)*m..(i*m - 1), x = 4m, y = 4m + 1.
Graph sharpness_graph(int m);

Graph classic_graph(ClassicKind kind, int n, int n2 = 0);
Graph clique_chain(int chain_len, int clique_size);
Graph line_graph(const Graph& base);
Graph random_graph(int n, int p_num, int p_den, Rng& rng);

/// Deterministic in (family, params, seed). The rejection families
/// (RandomRejection, LineGraph, CliqueChain) re-verify their output with the
/// exact checkers and only emit hypothesis-passing graphs; a GenerateError
/// signals an exhausted retry budget.
Graph generate(const FamilySpec& spec);

}  // namespace fewleaf
