#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fewleaf/graph.hpp"

namespace fewleaf {

/// Exact searches below are exponential-time by design and refuse instances
/// larger than this unless the caller raises the cap.
inline constexpr int kDefaultSearchCap = 64;

class SizeCapError : public std::runtime_error {
public:
    explicit SizeCapError(const std::string& what) : std::runtime_error(what) {}
};

/// True iff no two vertices of xs are adjacent.
bool is_independent(const Graph& g, std::span<const Vertex> xs);

/// N_k(X): vertices with exactly k neighbors inside X, as a sorted set.
std::vector<Vertex> neighborhood_class(const Graph& g, std::span<const Vertex> xs, int k);

/// alpha(G), exact, by branch and bound over bitmask candidate sets.
int independence_number(const Graph& g, int size_cap = kDefaultSearchCap);

struct SigmaResult {
    std::optional<long> value;     // nullopt encodes +infinity (alpha(G) < k)
    std::vector<Vertex> witness;   // minimizing independent k-set when finite

    bool infinite() const noexcept { return !value.has_value(); }
};

/// sigma_k(G): minimum degree sum over independent sets of size exactly k,
/// +infinity when no such set exists.
SigmaResult sigma_k(const Graph& g, int k, int size_cap = kDefaultSearchCap);

struct StarCheck {
    bool free = true;
    std::vector<Vertex> witness;   // [center, leaf_1..leaf_r] when !free
};

/// K_{1,r}-freeness via per-vertex independent-set search inside each
/// neighborhood (never global (1+r)-subset enumeration).
StarCheck is_k1r_free(const Graph& g, int r, int size_cap = kDefaultSearchCap);

struct HypothesisReport {
    bool connected = false;
    bool k15_free = false;
    std::optional<long> sigma4;          // nullopt = +infinity
    bool sigma4_ok = false;              // sigma4 infinite or >= n-1
    std::vector<Vertex> witness_star;    // induced K_{1,5}, present iff !k15_free
    std::vector<Vertex> witness_set;     // sigma4-minimizing 4-set when finite

    bool all_pass() const noexcept { return connected && k15_free && sigma4_ok; }
};

/// Bundled check: connected, K_{1,5}-free, sigma_4 >= n-1.
HypothesisReport check_hypotheses(const Graph& g, int size_cap = kDefaultSearchCap);

}  // namespace fewleaf
