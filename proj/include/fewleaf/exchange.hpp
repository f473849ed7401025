#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fewleaf/graph.hpp"
#include "fewleaf/tree.hpp"

namespace fewleaf {

class DisconnectedError : public std::runtime_error {
public:
    explicit DisconnectedError(const std::string& what) : std::runtime_error(what) {}
};

enum class MoveKind { Extend, LeafReattach, TwoSwap, ThreeSwap, FourSwap, BranchMerge };

const char* to_string(MoveKind k);

/// A tree rewiring: drop `remove` from the tree, add `add` from the host.
/// For rewirings |remove| == |add| in 1..4; Extend has no removals, one added
/// edge and brings exactly one new vertex into the tree.
struct ExchangeMove {
    MoveKind kind = MoveKind::LeafReattach;
    std::vector<Edge> remove;   // sorted
    std::vector<Edge> add;      // sorted

    friend bool operator==(const ExchangeMove&, const ExchangeMove&) = default;
};

/// Lexicographic solver potential; strictly decreasing along accepted steps.
/// Components: tree size (bigger is better), score excess over 5, branch
/// distance d_T[s,t] for two-branch shapes, and minus the total leg mass on
/// the degree-4 branch vertex for the degree-(4,3) shape.
struct Potential {
    int neg_size = 0;
    int score_class = 0;
    int dist_st = 0;
    int neg_leg_mass = 0;

    friend auto operator<=>(const Potential&, const Potential&) = default;
};

std::string to_string(const Potential& p);

struct SolverConfig {
    int max_swap_size = 4;          // 1..4
    long max_iterations = 0;        // 0 picks the default 10*n^2
    std::uint64_t seed = 0;
    bool use_targeted_moves = true;
    bool keep_trace = false;
};

enum class SolveStatus { Solved, StuckNotSpanning, StuckAtScore, IterationCapHit };

const char* to_string(SolveStatus s);

struct TraceEntry {
    long iteration = 0;
    MoveKind kind = MoveKind::Extend;
    std::vector<Edge> removed;
    std::vector<Edge> added;
    Potential after;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Solved;
    Tree tree;                      // best tree seen under the potential order
    int score = 0;
    long iterations = 0;
    std::vector<TraceEntry> trace;  // populated when cfg.keep_trace
};

/// One-line-per-accepted-move rendering of the trace; stable across runs
/// with equal seeds.
std::string format_trace(const SolveResult& r);

struct ExtendStep {
    Tree tree;
    int score_delta = 0;   // always in {0, 1, 2}
    Edge added;            // the host edge that brought the new vertex in
};

/// Grows T by one vertex along a host edge, choosing the attachment that
/// minimizes the new score (a leaf attachment when one exists). Returns
/// nullopt only when T is maximal: no host edge leaves V(T).
std::optional<ExtendStep> extend(const Graph& g, const Tree& t);

/// Visitor returns false to stop enumeration early.
using MoveVisitor = std::function<bool(const ExchangeMove&)>;

/// Streams tree-preserving rewirings with |remove| = |add| <= max_swap_size:
/// removed edges are tree edges, added edges are host edges not in the tree,
/// and the result is again a tree on the same vertex set. Moves whose result
/// has three or more branch vertices are suppressed unless the current tree
/// itself scores above 7 and the move strictly lowers the score. With
/// use_targeted_moves the generators derived from the branch decomposition
/// are streamed first, then the generic k-swaps in ascending k; order is
/// deterministic and duplicate-free.
void enumerate_moves(const Graph& g, const Tree& t, const SolverConfig& cfg,
                     const MoveVisitor& visit);

/// Applies a move, returning the rewired tree; the input is untouched.
/// Rejects moves that break tree-ness with diagnostics.
Tree apply_move(const Tree& t, const ExchangeMove& mv);

/// Potential of a tree with at most two branch vertices.
Potential potential_of(const Graph& g, const Tree& t);

/// Local search: depth-first seed tree from vertex (seed mod n), then
/// potential-descending exchanges until a spanning tree of score <= 5 is
/// found or no enumerated move improves the potential. Deterministic given
/// the config. Throws DisconnectedError on disconnected input.
SolveResult solve(const Graph& g, const SolverConfig& cfg = {});

}  // namespace fewleaf
