#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prismatic/ce_pipeline.hpp"
#include "prismatic/graph.hpp"
#include "prismatic/invariants.hpp"
#include "prismatic/oracles.hpp"

namespace prismatic {

/// Spanning tree given by a parent array (root has parent -1), with a
/// maximum-degree bound it is known to satisfy.
struct BoundedTree {
    std::vector<int> parent;
    int degree_bound = 0;

    int order() const { return static_cast<int>(parent.size()); }
    int root() const;
    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> degrees() const;
    int max_degree() const;
    Graph to_graph() const;

    /// Builds a tree rooted at 0 from n-1 edges; throws when the edges do
    /// not form a spanning tree or the degree bound fails.
    static BoundedTree from_edges(int n, const std::vector<std::pair<int, int>>& edges, int bound);
};

/// Closed spanning walk visiting every vertex at most visit_bound times.
struct SpanningWalk {
    std::vector<int> sequence; // cyclic
    int visit_bound = 0;
};

bool validate_walk(const Graph& g, const SpanningWalk& walk);

/// Euler tour of the doubled tree; every vertex appears exactly its tree
/// degree many times in the cyclic sequence.
SpanningWalk ttree_to_twalk(const BoundedTree& tree);

/// First-visit tree of a closed walk: scanning cyclically from the start,
/// vertex v attaches to its predecessor when first seen. The result has
/// maximum degree at most visit_bound + 1.
BoundedTree twalk_to_tree(const Graph& g, const SpanningWalk& walk);

/// Hamilton cycle of a cartesian product with C_t, as (vertex, level) pairs.
struct ProductHamCycle {
    int t = 0;
    std::vector<ProductVertex> sequence;
};

/// Independent re-check against cartesian_cycle(host, t).
bool verify_product_cycle(const Graph& host, const ProductHamCycle& c);

/// Constructive Hamilton cycle of tree x C_t by leaf induction: the base
/// fiber cycle is rerouted through each reattached leaf's entire fiber.
/// Requires max degree <= t (throws std::invalid_argument otherwise, the
/// legitimate refusal of the only-if direction) and t >= 3.
ProductHamCycle tree_cycle_ham(const BoundedTree& tree, int t);

struct CyclicProductOutcome {
    bool applicable = false; // alpha <= (t-1) * kappa
    int alpha = 0;
    int kappa = 0;
    std::optional<ProductHamCycle> cycle;
    bool verified = false;
};

/// If alpha(g) <= (t-1)*kappa(g): find a t-tree, build the product cycle,
/// and verify it against g x C_t (which embeds into g x K_t). Throws
/// TheoremViolation when no t-tree exists under the hypothesis.
CyclicProductOutcome cyclic_product_certificate(const Graph& g, int t, const Budget& budget = {});

struct ToughnessHamReport {
    bool complete_graph = false;
    Rational toughness_value{0};
    bool pred_hamiltonian = false;        // 2t(t+1) >= n
    bool pred_prism_hamiltonian = false;  // 4t(t+1) >= n
    bool hamiltonian_confirmed = false;
    bool prism_confirmed = false;
    bool violation = false; // a predicate held but confirmation failed
    std::string note;
};

/// Exact-rational evaluation of both toughness predicates, with oracle /
/// pipeline confirmation wherever one holds. Requires n >= 3.
ToughnessHamReport toughness_hamilton_check(const Graph& g, const Budget& budget = {});

} // namespace prismatic
