#pragma once

#include <boost/rational.hpp>
#include <optional>
#include <vector>

#include "prismatic/graph.hpp"

namespace prismatic {

using Rational = boost::rational<long long>;

struct IndependenceResult {
    int alpha = 0;
    std::vector<int> witness; // a maximum independent set, sorted
};

/// Maximum independent set by branch and bound with a greedy clique-cover
/// bound. Exact; agrees with subset enumeration. Throws on the empty graph.
IndependenceResult independence_number(const Graph& g);

struct ConnectivityResult {
    int kappa = 0;
    // A minimum vertex cut; absent exactly when g is complete (including K1).
    std::optional<std::vector<int>> cut;
};

/// Vertex connectivity via Menger / max-flow over a dominating set of pairs:
/// a fixed vertex against its non-neighbors, plus non-adjacent pairs among
/// its neighbors. kappa(K_n) = n-1 with no cut; kappa(K1) = 0.
ConnectivityResult connectivity(const Graph& g);

struct ToughnessResult {
    bool infinite = false; // complete graphs have no disconnecting cut
    Rational value{0};     // min |S| / c(G-S) over cuts with c(G-S) >= 2
    std::vector<int> cut;
    int components = 0; // c(G - cut) for the witness
};

/// Exact toughness by enumerating all vertex subsets; capped at n <= 16.
ToughnessResult toughness(const Graph& g);

struct BipartiteResult {
    bool bipartite = false;
    std::vector<int> coloring; // 0/1 per vertex when bipartite
    std::vector<int> odd_walk; // closed odd walk (as a cycle) otherwise
};

BipartiteResult is_bipartite(const Graph& g);

struct GraphParams {
    int n = 0;
    int alpha = 0;
    int kappa = 0;
    std::optional<ToughnessResult> toughness; // absent when n > 16
};

/// alpha, kappa and (for n <= 16) toughness in one call.
GraphParams graph_params(const Graph& g);

} // namespace prismatic
