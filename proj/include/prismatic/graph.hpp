#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace prismatic {

/// Simple undirected graph on vertices 0..n-1, stored as sorted adjacency
/// lists. Immutable after construction; every operation below is a pure
/// function returning a fresh graph, so values can be shared freely
/// between threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges collapse; a
    /// self-loop or an endpoint outside 0..n-1 throws std::invalid_argument.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const { return m_; }

    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// Vertex (base, level) of a cartesian product g x H, numbered base + level*n.
struct ProductVertex {
    int base = 0;
    int level = 0;

    int id(int n) const { return base + level * n; }
    static ProductVertex from_id(int id, int n) { return {id % n, id / n}; }
    bool operator==(const ProductVertex&) const = default;
};

/// G x K2: two copies of g plus the perfect matching of vertical edges.
/// Vertex (u, i) is numbered u + i*n.
Graph prism(const Graph& g);

/// G x C_t for t >= 3: every fiber is a t-cycle, cross edges replicate g per level.
Graph cartesian_cycle(const Graph& g, int t);

/// G x K_t for t >= 2; t = 2 agrees with prism().
Graph cartesian_complete(const Graph& g, int t);

/// K_{k,a} with parts {0..k-1} and {k..k+a-1}.
Graph complete_bipartite(int k, int a);

Graph empty_graph(int n);
Graph path_graph(int n);     // n >= 1
Graph cycle_graph(int n);    // n >= 3
Graph complete_graph(int n); // n >= 0
Graph petersen_graph();

/// Parses "petersen", "cycle(N)", "path(N)" or "complete(N)".
Graph named_graph(const std::string& name);

/// G(n, p) with a seeded xorshift64* generator (see random_gnp in graph.cpp
/// for the exact recurrence); identical (n, p, seed) give identical graphs
/// on every platform. Pairs (i, j), i < j, are drawn in row-major order.
Graph random_gnp(int n, double p, std::uint64_t seed);

} // namespace prismatic
