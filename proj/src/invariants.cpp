#include "prismatic/invariants.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace prismatic {

namespace {

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    const int n = g.order();
    if (n > 64) throw std::invalid_argument("invariants support at most 64 vertices");
    std::vector<std::uint64_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[v] |= std::uint64_t{1} << w;
    return adj;
}

struct MisSolver {
    int n;
    const std::vector<std::uint64_t>& adj;
    int best = 0;
    std::uint64_t best_set = 0;

    // Greedy clique cover of G[p]: alpha(G[p]) never exceeds the cover size.
    int clique_cover_bound(std::uint64_t p) const {
        std::vector<std::uint64_t> cliques;
        for (std::uint64_t rest = p; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            bool placed = false;
            for (auto& c : cliques) {
                if ((c & ~adj[v]) == 0) {
                    c |= std::uint64_t{1} << v;
                    placed = true;
                    break;
                }
            }
            if (!placed) cliques.push_back(std::uint64_t{1} << v);
        }
        return static_cast<int>(cliques.size());
    }

    void run(std::uint64_t p, std::uint64_t chosen, int size) {
        if (p == 0) {
            if (size > best) {
                best = size;
                best_set = chosen;
            }
            return;
        }
        if (size + std::popcount(p) <= best) return;
        if (size + clique_cover_bound(p) <= best) return;

        // Branch on the candidate with the most candidate neighbors.
        int pivot = -1, pivot_deg = -1;
        for (std::uint64_t rest = p; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const int d = std::popcount(adj[v] & p);
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = v;
            }
        }
        const std::uint64_t vbit = std::uint64_t{1} << pivot;
        run(p & ~(adj[pivot] | vbit), chosen | vbit, size + 1);
        run(p & ~vbit, chosen, size);
    }
};

bool is_complete(const Graph& g) {
    const long long n = g.order();
    return 2LL * g.size() == n * (n - 1);
}

// Unit-capacity vertex-split max-flow for internally disjoint path counts.
// Node 2v is v_in, node 2v+1 is v_out.
struct VertexFlow {
    int n;
    std::vector<std::vector<int>> cap;

    explicit VertexFlow(const Graph& g) : n(g.order()), cap(2 * n, std::vector<int>(2 * n, 0)) {
        constexpr int inf = 1 << 20;
        for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = 1;
        for (auto [u, v] : g.edges()) {
            cap[2 * u + 1][2 * v] = inf;
            cap[2 * v + 1][2 * u] = inf;
        }
    }

    // Max-flow from s_out to t_in, stopping once `bound` is reached.
    int max_flow(int s, int t, int bound, std::vector<std::vector<int>>& residual) const {
        residual = cap;
        residual[2 * s][2 * s + 1] = 1 << 20;
        residual[2 * t][2 * t + 1] = 1 << 20;
        const int source = 2 * s + 1, sink = 2 * t;
        int flow = 0;
        std::vector<int> parent(2 * n);
        while (flow < bound) {
            std::fill(parent.begin(), parent.end(), -1);
            parent[source] = source;
            std::vector<int> queue{source};
            for (std::size_t qi = 0; qi < queue.size() && parent[sink] < 0; ++qi) {
                const int x = queue[qi];
                for (int y = 0; y < 2 * n; ++y)
                    if (parent[y] < 0 && residual[x][y] > 0) {
                        parent[y] = x;
                        queue.push_back(y);
                    }
            }
            if (parent[sink] < 0) break;
            for (int y = sink; y != source; y = parent[y]) {
                residual[parent[y]][y] -= 1;
                residual[y][parent[y]] += 1;
            }
            ++flow;
        }
        return flow;
    }

    // Vertices v with v_in residual-reachable from s_out but v_out not.
    std::vector<int> cut_from_residual(int s, const std::vector<std::vector<int>>& residual) const {
        const int source = 2 * s + 1;
        std::vector<char> seen(2 * n, 0);
        seen[source] = 1;
        std::vector<int> queue{source};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int x = queue[qi];
            for (int y = 0; y < 2 * n; ++y)
                if (!seen[y] && residual[x][y] > 0) {
                    seen[y] = 1;
                    queue.push_back(y);
                }
        }
        std::vector<int> cut;
        for (int v = 0; v < n; ++v)
            if (seen[2 * v] && !seen[2 * v + 1]) cut.push_back(v);
        return cut;
    }
};

int component_count_without(const Graph& g, std::uint64_t removed) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    int comps = 0;
    for (int v = 0; v < n; ++v) {
        if (seen[v] || ((removed >> v) & 1)) continue;
        ++comps;
        std::vector<int> queue{v};
        seen[v] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (int w : g.neighbors(queue[qi]))
                if (!seen[w] && !((removed >> w) & 1)) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
    }
    return comps;
}

} // namespace

IndependenceResult independence_number(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("independence_number: empty graph");
    const auto adj = adjacency_masks(g);
    MisSolver solver{n, adj};
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    solver.run(all, 0, 0);
    IndependenceResult result;
    result.alpha = solver.best;
    for (int v = 0; v < n; ++v)
        if ((solver.best_set >> v) & 1) result.witness.push_back(v);
    return result;
}

ConnectivityResult connectivity(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("connectivity: empty graph");
    if (is_complete(g)) return {n - 1, std::nullopt};

    int v0 = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(v0)) v0 = v;

    VertexFlow flow(g);
    std::vector<std::vector<int>> residual;
    int best = n - 1;
    std::optional<std::vector<int>> best_cut;

    auto consider = [&](int s, int t) {
        const int f = flow.max_flow(s, t, best, residual);
        if (f < best) {
            best = f;
            best_cut = flow.cut_from_residual(s, residual);
        }
    };

    for (int u = 0; u < n; ++u)
        if (u != v0 && !g.adjacent(v0, u)) consider(v0, u);
    const auto& nbrs = g.neighbors(v0);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
        for (std::size_t j = i + 1; j < nbrs.size(); ++j)
            if (!g.adjacent(nbrs[i], nbrs[j])) consider(nbrs[i], nbrs[j]);

    return {best, best_cut};
}

ToughnessResult toughness(const Graph& g) {
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("toughness: empty graph");
    if (n > 16) throw std::invalid_argument("toughness enumeration capped at n = 16");
    ToughnessResult result;
    if (is_complete(g)) {
        result.infinite = true;
        return result;
    }
    bool have = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (std::popcount(mask) >= n) continue;
        const int comps = component_count_without(g, mask);
        if (comps < 2) continue;
        const Rational ratio(static_cast<long long>(std::popcount(mask)), comps);
        if (!have || ratio < result.value) {
            have = true;
            result.value = ratio;
            result.components = comps;
            result.cut.clear();
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1) result.cut.push_back(v);
        }
    }
    // Non-complete graphs always admit a cut: delete the neighborhood of any
    // vertex that is not universal.
    if (!have) throw std::logic_error("toughness: no cut found for a non-complete graph");
    return result;
}

BipartiteResult is_bipartite(const Graph& g) {
    const int n = g.order();
    BipartiteResult result;
    std::vector<int> color(n, -1), parent(n, -1);
    for (int root = 0; root < n; ++root) {
        if (color[root] >= 0) continue;
        color[root] = 0;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            for (int w : g.neighbors(u)) {
                if (color[w] < 0) {
                    color[w] = color[u] ^ 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    // Odd closed walk: u -> ... -> lca -> ... -> w -> u.
                    std::vector<char> on_u_path(n, 0);
                    std::vector<int> up_u;
                    for (int x = u; x >= 0; x = parent[x]) {
                        on_u_path[x] = 1;
                        up_u.push_back(x);
                    }
                    int lca = w;
                    while (!on_u_path[lca]) lca = parent[lca];
                    std::vector<int> walk;
                    for (int x : up_u) {
                        walk.push_back(x);
                        if (x == lca) break;
                    }
                    std::vector<int> down_w;
                    for (int x = w; x != lca; x = parent[x]) down_w.push_back(x);
                    walk.insert(walk.end(), down_w.rbegin(), down_w.rend());
                    result.bipartite = false;
                    result.odd_walk = walk;
                    return result;
                }
            }
        }
    }
    result.bipartite = true;
    result.coloring = color;
    return result;
}

GraphParams graph_params(const Graph& g) {
    GraphParams params;
    params.n = g.order();
    params.alpha = independence_number(g).alpha;
    params.kappa = connectivity(g).kappa;
    if (params.n <= 16) params.toughness = toughness(g);
    return params;
}

} // namespace prismatic
