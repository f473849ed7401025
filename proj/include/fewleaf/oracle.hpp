#pragma once

#include <functional>
#include <span>
#include <stdexcept>

#include "fewleaf/exchange.hpp"
#include "fewleaf/graph.hpp"
#include "fewleaf/tree.hpp"

namespace fewleaf {

class EnumerationCapError : public std::runtime_error {
public:
    explicit EnumerationCapError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr long long kDefaultTreeCap = 10'000'000;

/// Visitor receives each spanning tree's edge set; return false to stop.
using TreeVisitor = std::function<bool(std::span<const Edge>)>;

/// Visits every spanning tree exactly once (edge-set identity) by recursive
/// bridge-aware contraction/deletion. Returns the number of trees visited.
/// Throws DisconnectedError on disconnected input and EnumerationCapError
/// when more than `cap` trees would be visited (partial results discarded).
long long enumerate_spanning_trees(const Graph& g, const TreeVisitor& visit,
                                   long long cap = kDefaultTreeCap);

struct OracleOptions {
    long long tree_cap = kDefaultTreeCap;
    int target_score = 2;   // stop as soon as a tree at or below this is seen
};

struct OracleResult {
    int min_score = 0;
    Tree witness;
    long long trees_enumerated = 0;
    bool feasible_le5 = false;   // min_score <= 5
};

/// Exact minimum of |L(T)| + |B(T)| over all spanning trees. Score 2 (a
/// Hamiltonian path) is the global minimum for n >= 2, so enumeration always
/// stops there; a larger target_score trades exactness above the target for
/// speed.
OracleResult min_score(const Graph& g, const OracleOptions& opts = {});

/// Number of spanning trees via a Laplacian cofactor determinant in exact
/// integer arithmetic (fraction-free elimination). Requires n <= 12.
long long spanning_tree_count_determinant(const Graph& g);

/// True iff enumeration count equals the determinant count. Requires n <= 12.
bool spanning_tree_count_check(const Graph& g);

}  // namespace fewleaf
