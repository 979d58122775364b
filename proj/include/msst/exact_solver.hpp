#ifndef MSST_EXACT_SOLVER_HPP
#define MSST_EXACT_SOLVER_HPP

#include <functional>
#include <optional>
#include <span>

#include "msst/graph.hpp"
#include "msst/spanning_tree.hpp"

namespace msst {

/// Resource caps for the enumeration oracle.
struct SolveBudget {
    int max_vertices = 12;
    long long max_trees = 10'000'000;
    double time_cap_seconds = 300.0;
};

struct EnumerateStats {
    long long trees_enumerated = 0;
    bool exhausted = true;  // false when a budget cap or the visitor cut the run short
};

/// Exact optimum over all spanning trees. When exhausted is false the run
/// hit a budget cap and optimum is only the best value found (an upper
/// bound), not proven optimal.
struct SolveResult {
    int optimum = 0;
    SpanningTree optimal_tree;
    long long trees_enumerated = 0;
    bool exhausted = true;
};

enum class KSpannerAnswer { Yes, No, Unknown };

/// Unknown only when the budget ran out before either finding a witness or
/// covering the search space.
struct KSpannerResult {
    KSpannerAnswer answer = KSpannerAnswer::Unknown;
    std::optional<SpanningTree> witness;  // set iff answer == Yes
    long long trees_enumerated = 0;
};

/// Streams every spanning tree exactly once (contraction/deletion branching
/// over the canonical edge order; edge sets arrive in lexicographic order).
/// The visitor receives the sorted edge set and may return false to stop.
EnumerateStats enumerate_spanning_trees(const ExplicitGraph& g, const SolveBudget& budget,
                                        const std::function<bool(std::span<const Edge>)>& visit);

/// Minimizes max-stretch by pruned exhaustive search. A partial tree is
/// abandoned as soon as some graph edge with both endpoints already
/// connected is forced into a detour longer than the best value seen, which
/// preserves the exact optimum. Ties are broken toward the lexicographically
/// smallest edge set, so results are reproducible; jobs > 1 partitions the
/// branching tree across threads with the same deterministic reduction.
SolveResult exact_tree_stretch(const ExplicitGraph& g, const SolveBudget& budget, int jobs = 1);

/// Decides whether some spanning tree has max-stretch at most k, exiting on
/// the first witness.
KSpannerResult k_spanner_decision(const ExplicitGraph& g, int k, const SolveBudget& budget);

}  // namespace msst

#endif
