#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "prismatic/errors.hpp"
#include "prismatic/graph.hpp"

namespace prismatic {

struct EvenCactus;

/// Wall-clock cap for one search. Default-constructed budgets never expire.
struct Budget {
    bool limited = false;
    std::chrono::steady_clock::time_point deadline{};

    static Budget unlimited() { return {}; }
    static Budget from_ms(long long ms) {
        Budget b;
        b.limited = true;
        b.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
        return b;
    }
    bool expired() const {
        return limited && std::chrono::steady_clock::now() >= deadline;
    }
};

/// Every searcher distinguishes a definitive "no witness exists" from
/// running out of budget; negative answers are only trustworthy in the
/// first case.
enum class SearchStatus { found, none, budget_exceeded };

template <typename T>
struct Search {
    SearchStatus status = SearchStatus::none;
    std::optional<T> witness;

    bool found() const { return status == SearchStatus::found; }
    bool definitive_none() const { return status == SearchStatus::none; }
    bool out_of_budget() const { return status == SearchStatus::budget_exceeded; }
    const T& value() const { return *witness; }
};

template <typename T>
Search<T> search_found(T value) {
    return Search<T>{SearchStatus::found, std::move(value)};
}
template <typename T>
Search<T> search_none() {
    return Search<T>{SearchStatus::none, std::nullopt};
}
template <typename T>
Search<T> search_budget() {
    return Search<T>{SearchStatus::budget_exceeded, std::nullopt};
}

using CycleWitness = std::vector<int>;

/// Vertex-disjoint paths covering V(G); singleton paths are allowed. The
/// designated start of each path is its first element.
struct PathCover {
    std::vector<std::vector<int>> paths;
};

/// Exhaustive backtracking with completeness-preserving pruning (unvisited
/// region connectivity, minimum available degree). Requires n >= 3.
Search<CycleWitness> hamilton_cycle(const Graph& g, const Budget& budget = {});

/// Spanning path or definitive none. Requires n >= 1.
Search<std::vector<int>> hamilton_path(const Graph& g, const Budget& budget = {});

/// Cover of V(G) by at most r vertex-disjoint paths, found by adding r
/// pairwise-adjacent universal vertices, searching a Hamilton cycle in the
/// augmented graph, and deleting the added vertices.
Search<PathCover> path_cover(const Graph& g, int r, const Budget& budget = {});

/// Even-length cycle through every vertex of s, by DFS over simple cycles
/// with parity checked at closing. Capped at n <= 16 (budget result beyond).
/// When kappa(g) >= max(3, |s|) an exhausted search is impossible and throws
/// TheoremViolation.
Search<CycleWitness> even_cycle_through(const Graph& g, const std::vector<int>& s,
                                        const Budget& budget = {});

/// Spanning tree with maximum degree <= t, or definitive none.
Search<std::vector<std::pair<int, int>>> bounded_degree_spanning_tree(
    const Graph& g, int t, const Budget& budget = {});

/// Exhaustive search for any spanning even cactus (fallback / auditing
/// oracle, intended for n <= 12). Requires n >= 2.
Search<EvenCactus> exhaustive_even_cactus(const Graph& g, const Budget& budget = {});

/// Pure re-check that c is a cycle of g (spanning V(G) when requested).
/// Shares no code with the searchers.
bool verify_cycle(const Graph& g, const std::vector<int>& c, bool spanning);

/// Vertex-disjoint path cover validity: paths disjoint, edges present,
/// union covers V(G).
bool verify_path_cover(const Graph& g, const PathCover& cover);

} // namespace prismatic
