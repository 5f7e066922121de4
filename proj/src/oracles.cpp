#include "prismatic/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "prismatic/cactus.hpp"
#include "prismatic/invariants.hpp"

namespace prismatic {

namespace {

using u64 = std::uint64_t;

constexpr u64 bit(int v) { return u64{1} << v; }

struct MaskGraph {
    int n = 0;
    std::vector<u64> adj;

    explicit MaskGraph(const Graph& g) : n(g.order()), adj(g.order(), 0) {
        if (n > 64) throw std::invalid_argument("oracle searches support at most 64 vertices");
        for (int v = 0; v < n; ++v)
            for (int w : g.neighbors(v)) adj[v] |= bit(w);
    }

    u64 reach(u64 mask, int start) const {
        u64 visited = bit(start) & mask;
        u64 frontier = visited;
        while (frontier) {
            u64 next = 0;
            for (u64 f = frontier; f;) {
                const int v = std::countr_zero(f);
                f &= f - 1;
                next |= adj[v] & mask & ~visited;
            }
            visited |= next;
            frontier = next;
        }
        return visited;
    }
};

// Budget polling is amortized over search nodes.
struct Ticker {
    const Budget& budget;
    unsigned counter = 0;
    bool hit = false;
    bool expired() {
        if (hit) return true;
        if ((++counter & 1023u) == 0 && budget.expired()) hit = true;
        return hit;
    }
};

struct HamCycleSearch {
    const MaskGraph& mg;
    Ticker tick;
    u64 all;
    std::vector<int> path;

    SearchStatus run(int cur, u64 visited) {
        if (tick.expired()) return SearchStatus::budget_exceeded;
        const u64 unvisited = all & ~visited;
        if (unvisited == 0)
            return (mg.adj[cur] & bit(0)) ? SearchStatus::found : SearchStatus::none;

        // The rest of the cycle is a Hamilton path of G[unvisited], entered
        // from cur and leaving to vertex 0; these conditions are necessary.
        if ((mg.adj[0] & unvisited) == 0) return SearchStatus::none;
        if ((mg.adj[cur] & unvisited) == 0) return SearchStatus::none;
        const int seed = std::countr_zero(unvisited);
        if (mg.reach(unvisited, seed) != unvisited) return SearchStatus::none;
        const u64 usable = unvisited | bit(cur) | bit(0);
        for (u64 rest = unvisited; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (std::popcount(mg.adj[v] & usable) < 2) return SearchStatus::none;
        }

        for (u64 cand = mg.adj[cur] & unvisited; cand;) {
            const int w = std::countr_zero(cand);
            cand &= cand - 1;
            path.push_back(w);
            const SearchStatus st = run(w, visited | bit(w));
            if (st != SearchStatus::none) return st;
            path.pop_back();
        }
        return SearchStatus::none;
    }
};

struct HamPathSearch {
    const MaskGraph& mg;
    Ticker tick;
    u64 all;
    std::vector<int> path;

    SearchStatus run(int cur, u64 visited) {
        if (tick.expired()) return SearchStatus::budget_exceeded;
        const u64 unvisited = all & ~visited;
        if (unvisited == 0) return SearchStatus::found;

        const u64 usable = unvisited | bit(cur);
        if ((mg.adj[cur] & unvisited) == 0) return SearchStatus::none;
        if (mg.reach(usable, cur) != usable) return SearchStatus::none;
        int pendant = 0;
        for (u64 rest = unvisited; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            const int avail = std::popcount(mg.adj[v] & usable);
            if (avail == 0) return SearchStatus::none;
            if (avail == 1 && ++pendant > 1) return SearchStatus::none;
        }

        for (u64 cand = mg.adj[cur] & unvisited; cand;) {
            const int w = std::countr_zero(cand);
            cand &= cand - 1;
            path.push_back(w);
            const SearchStatus st = run(w, visited | bit(w));
            if (st != SearchStatus::none) return st;
            path.pop_back();
        }
        return SearchStatus::none;
    }
};

struct EvenCycleSearch {
    const MaskGraph& mg;
    Ticker tick;
    u64 all;
    u64 targets;
    int start;
    std::vector<int> path;

    SearchStatus run(int cur, u64 visited) {
        if (tick.expired()) return SearchStatus::budget_exceeded;
        if (path.size() >= 3 && (mg.adj[cur] & bit(start)) && (targets & ~visited) == 0 &&
            path.size() % 2 == 0 && path[1] < cur)
            return SearchStatus::found;

        const u64 unvisited = all & ~visited;
        const u64 remaining_targets = targets & ~visited;
        const u64 region = mg.reach(unvisited | bit(cur), cur);
        if (remaining_targets & ~region) return SearchStatus::none;
        // The walk must eventually close back at start through an unvisited
        // neighbor of start (or the current edge).
        if ((mg.adj[start] & region) == 0) return SearchStatus::none;

        for (u64 cand = mg.adj[cur] & unvisited; cand;) {
            const int w = std::countr_zero(cand);
            cand &= cand - 1;
            path.push_back(w);
            const SearchStatus st = run(w, visited | bit(w));
            if (st != SearchStatus::none) return st;
            path.pop_back();
        }
        return SearchStatus::none;
    }
};

struct Dsu {
    std::vector<int> parent, size;
    std::vector<std::pair<int, int>> trail; // (child_root, old_size_of_parent)

    explicit Dsu(int n) : parent(n), size(n, 1) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) const {
        while (parent[x] != x) x = parent[x];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        trail.emplace_back(b, size[a]);
        size[a] += size[b];
        return true;
    }
    std::size_t mark() const { return trail.size(); }
    void rollback(std::size_t to) {
        while (trail.size() > to) {
            auto [child, old_size] = trail.back();
            trail.pop_back();
            size[parent[child]] = old_size;
            parent[child] = child;
        }
    }
};

struct SpanningTreeSearch {
    int n;
    int t;
    const std::vector<std::pair<int, int>>& edges;
    Ticker tick;
    Dsu dsu;
    std::vector<int> deg;
    std::vector<char> used;

    SpanningTreeSearch(int n_, int t_, const std::vector<std::pair<int, int>>& e, const Budget& b)
        : n(n_), t(t_), edges(e), tick{b}, dsu(n_), deg(n_, 0), used(e.size(), 0) {}

    bool rest_connects(std::size_t from) {
        const auto mark = dsu.mark();
        for (std::size_t i = from; i < edges.size(); ++i) dsu.unite(edges[i].first, edges[i].second);
        const int root = dsu.find(0);
        bool ok = true;
        for (int v = 1; v < n && ok; ++v) ok = dsu.find(v) == root;
        dsu.rollback(mark);
        return ok;
    }

    SearchStatus run(std::size_t idx, int chosen) {
        if (tick.expired()) return SearchStatus::budget_exceeded;
        if (chosen == n - 1) return SearchStatus::found;
        if (idx == edges.size()) return SearchStatus::none;
        if (chosen + static_cast<int>(edges.size() - idx) < n - 1) return SearchStatus::none;

        auto [u, v] = edges[idx];
        if (deg[u] < t && deg[v] < t && dsu.find(u) != dsu.find(v)) {
            const auto mark = dsu.mark();
            dsu.unite(u, v);
            ++deg[u];
            ++deg[v];
            used[idx] = 1;
            const SearchStatus st = run(idx + 1, chosen + 1);
            if (st != SearchStatus::none) return st;
            used[idx] = 0;
            --deg[u];
            --deg[v];
            dsu.rollback(mark);
        }
        if (!rest_connects(idx + 1)) return SearchStatus::none;
        return run(idx + 1, chosen);
    }
};

// Incremental even-cactus search state: chosen edges are either forest
// ("bridge") edges or edges of closed even cycles. Closing an edge inside a
// component is only legal along a cycle-free forest path of odd edge count.
struct CactusSearch {
    const Graph& g;
    int n;
    std::vector<std::pair<int, int>> edges;
    Ticker tick;
    Dsu dsu;
    std::vector<int> deg;
    std::vector<char> on_cycle;
    std::vector<std::vector<int>> bridge_adj;
    std::vector<std::vector<int>> cycles;
    int max_edges;
    EvenCactus result;

    CactusSearch(const Graph& graph, const Budget& b)
        : g(graph), n(graph.order()), edges(graph.edges()), tick{b}, dsu(graph.order()),
          deg(graph.order(), 0), on_cycle(graph.order(), 0), bridge_adj(graph.order()),
          max_edges(graph.order() - 1 + graph.order() / 4) {}

    // Path between u and v using bridge edges only; empty when none exists.
    std::vector<int> bridge_path(int u, int v) const {
        std::vector<int> prev(n, -2);
        prev[u] = -1;
        std::vector<int> queue{u};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int x = queue[qi];
            if (x == v) break;
            for (int y : bridge_adj[x])
                if (prev[y] == -2) {
                    prev[y] = x;
                    queue.push_back(y);
                }
        }
        if (prev[v] == -2) return {};
        std::vector<int> path;
        for (int x = v; x != -1; x = prev[x]) path.push_back(x);
        std::reverse(path.begin(), path.end());
        return path;
    }

    bool rest_connects(std::size_t from) {
        const auto mark = dsu.mark();
        for (std::size_t i = from; i < edges.size(); ++i) dsu.unite(edges[i].first, edges[i].second);
        const int root = dsu.find(0);
        bool ok = true;
        for (int v = 1; v < n && ok; ++v) ok = dsu.find(v) == root;
        dsu.rollback(mark);
        return ok;
    }

    bool spanning_connected() const {
        const int root = dsu.find(0);
        for (int v = 1; v < n; ++v)
            if (dsu.find(v) != root) return false;
        return true;
    }

    bool finalize() {
        if (!spanning_connected()) return false;
        for (int v = 0; v < n; ++v) {
            const int bdeg = static_cast<int>(bridge_adj[v].size());
            if (on_cycle[v] ? bdeg > 1 : bdeg > 2) return false;
            if (!on_cycle[v] && bdeg == 0 && n > 1) return false;
        }
        // Bridge components are simple paths; walk each from an endpoint.
        std::vector<std::vector<int>> paths;
        std::vector<char> seen(n, 0);
        for (int v = 0; v < n; ++v) {
            if (seen[v] || bridge_adj[v].size() != 1) continue;
            std::vector<int> path{v};
            seen[v] = 1;
            int prev = -1, cur = v;
            while (true) {
                int next = -1;
                for (int w : bridge_adj[cur])
                    if (w != prev) next = w;
                if (next < 0) break;
                path.push_back(next);
                seen[next] = 1;
                prev = cur;
                cur = next;
            }
            paths.push_back(std::move(path));
        }
        EvenCactus candidate{cycles, paths};
        if (validate_even_cactus(g, candidate)) return false;
        result = std::move(candidate);
        return true;
    }

    SearchStatus run(std::size_t idx, int chosen) {
        if (tick.expired()) return SearchStatus::budget_exceeded;
        if (finalize()) return SearchStatus::found;
        if (idx == edges.size()) return SearchStatus::none;
        if (!rest_connects(idx)) return SearchStatus::none;

        auto [u, v] = edges[idx];
        if (chosen < max_edges && deg[u] < 3 && deg[v] < 3) {
            if (dsu.find(u) != dsu.find(v)) {
                const auto mark = dsu.mark();
                dsu.unite(u, v);
                bridge_adj[u].push_back(v);
                bridge_adj[v].push_back(u);
                ++deg[u];
                ++deg[v];
                const SearchStatus st = run(idx + 1, chosen + 1);
                if (st != SearchStatus::none) return st;
                --deg[u];
                --deg[v];
                bridge_adj[u].pop_back();
                bridge_adj[v].pop_back();
                dsu.rollback(mark);
            } else {
                const std::vector<int> path = bridge_path(u, v);
                bool legal = !path.empty() && path.size() % 2 == 0;
                for (std::size_t i = 0; legal && i < path.size(); ++i)
                    if (on_cycle[path[i]]) legal = false;
                if (legal) {
                    // Promote the forest path to a cycle.
                    for (int x : path) on_cycle[x] = 1;
                    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                        const int a = path[i], b = path[i + 1];
                        std::erase(bridge_adj[a], b);
                        std::erase(bridge_adj[b], a);
                    }
                    ++deg[u];
                    ++deg[v];
                    cycles.push_back(path);
                    const SearchStatus st = run(idx + 1, chosen + 1);
                    if (st != SearchStatus::none) return st;
                    cycles.pop_back();
                    --deg[u];
                    --deg[v];
                    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                        const int a = path[i], b = path[i + 1];
                        bridge_adj[a].push_back(b);
                        bridge_adj[b].push_back(a);
                    }
                    for (int x : path) on_cycle[x] = 0;
                }
            }
        }
        return run(idx + 1, chosen);
    }
};

} // namespace

Search<CycleWitness> hamilton_cycle(const Graph& g, const Budget& budget) {
    const int n = g.order();
    if (n < 3) throw std::invalid_argument("hamilton_cycle requires n >= 3");
    const MaskGraph mg(g);
    for (int v = 0; v < n; ++v)
        if (std::popcount(mg.adj[v]) < 2) return search_none<CycleWitness>();
    const u64 all = n == 64 ? ~u64{0} : bit(n) - 1;
    if (mg.reach(all, 0) != all) return search_none<CycleWitness>();

    HamCycleSearch search{mg, Ticker{budget}, all, {0}};
    const SearchStatus st = search.run(0, bit(0));
    if (st == SearchStatus::found) return search_found<CycleWitness>(search.path);
    if (st == SearchStatus::budget_exceeded) return search_budget<CycleWitness>();
    return search_none<CycleWitness>();
}

Search<std::vector<int>> hamilton_path(const Graph& g, const Budget& budget) {
    const int n = g.order();
    if (n < 1) throw std::invalid_argument("hamilton_path requires n >= 1");
    if (n == 1) return search_found<std::vector<int>>({0});
    const MaskGraph mg(g);
    const u64 all = n == 64 ? ~u64{0} : bit(n) - 1;
    if (mg.reach(all, 0) != all) return search_none<std::vector<int>>();

    for (int start = 0; start < n; ++start) {
        HamPathSearch search{mg, Ticker{budget}, all, {start}};
        const SearchStatus st = search.run(start, bit(start));
        if (st == SearchStatus::found) return search_found<std::vector<int>>(search.path);
        if (st == SearchStatus::budget_exceeded) return search_budget<std::vector<int>>();
    }
    return search_none<std::vector<int>>();
}

Search<PathCover> path_cover(const Graph& g, int r, const Budget& budget) {
    const int n = g.order();
    if (n < 1 || r < 1) throw std::invalid_argument("path_cover requires n >= 1 and r >= 1");
    if (n == 1) return search_found<PathCover>(PathCover{{{0}}});

    // The augmentation: r new pairwise-adjacent vertices adjacent to all of G.
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int i = 0; i < r; ++i)
        for (int u = 0; u < n + i; ++u) edges.emplace_back(u, n + i);
    const Graph augmented = Graph::from_edge_list(n + r, edges);

    const auto hc = hamilton_cycle(augmented, budget);
    if (hc.out_of_budget()) return search_budget<PathCover>();
    if (hc.definitive_none()) return search_none<PathCover>();

    const auto& cycle = hc.value();
    const int total = n + r;
    int first_added = -1;
    for (int i = 0; i < total; ++i)
        if (cycle[i] >= n) {
            first_added = i;
            break;
        }
    PathCover cover;
    std::vector<int> current;
    for (int k = 1; k <= total; ++k) {
        const int v = cycle[(first_added + k) % total];
        if (v >= n) {
            if (!current.empty()) cover.paths.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(v);
        }
    }
    if (!current.empty()) cover.paths.push_back(std::move(current));
    return search_found<PathCover>(std::move(cover));
}

Search<CycleWitness> even_cycle_through(const Graph& g, const std::vector<int>& s,
                                        const Budget& budget) {
    const int n = g.order();
    if (s.empty()) throw std::invalid_argument("even_cycle_through requires a non-empty vertex set");
    for (int v : s)
        if (v < 0 || v >= n) throw std::invalid_argument("even_cycle_through: vertex out of range");
    if (n > 16) return search_budget<CycleWitness>(); // desk-scale cap

    const MaskGraph mg(g);
    const u64 all = bit(n) - 1;
    u64 targets = 0;
    for (int v : s) targets |= bit(v);
    const int start = std::countr_zero(targets);

    EvenCycleSearch search{mg, Ticker{budget}, all, targets, start, {start}};
    const SearchStatus st = search.run(start, bit(start));
    if (st == SearchStatus::found) return search_found<CycleWitness>(search.path);
    if (st == SearchStatus::budget_exceeded) return search_budget<CycleWitness>();

    const int kappa = connectivity(g).kappa;
    const int k = std::max(3, static_cast<int>(std::popcount(targets)));
    if (kappa >= k)
        throw TheoremViolation("even_cycle_through exhausted although kappa >= max(3, |S|)");
    return search_none<CycleWitness>();
}

Search<std::vector<std::pair<int, int>>> bounded_degree_spanning_tree(const Graph& g, int t,
                                                                      const Budget& budget) {
    const int n = g.order();
    if (n < 1 || t < 1)
        throw std::invalid_argument("bounded_degree_spanning_tree requires n >= 1 and t >= 1");
    using TreeEdges = std::vector<std::pair<int, int>>;
    if (n == 1) return search_found<TreeEdges>({});
    const auto edges = g.edges();

    SpanningTreeSearch search(n, t, edges, budget);
    if (!search.rest_connects(0)) return search_none<TreeEdges>();
    const SearchStatus st = search.run(0, 0);
    if (st == SearchStatus::budget_exceeded) return search_budget<TreeEdges>();
    if (st == SearchStatus::none) return search_none<TreeEdges>();
    TreeEdges tree;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (search.used[i]) tree.push_back(edges[i]);
    return search_found<TreeEdges>(std::move(tree));
}

Search<EvenCactus> exhaustive_even_cactus(const Graph& g, const Budget& budget) {
    if (g.order() < 2) throw std::invalid_argument("exhaustive_even_cactus requires n >= 2");
    CactusSearch search(g, budget);
    const SearchStatus st = search.run(0, 0);
    if (st == SearchStatus::found) return search_found<EvenCactus>(std::move(search.result));
    if (st == SearchStatus::budget_exceeded) return search_budget<EvenCactus>();
    return search_none<EvenCactus>();
}

bool verify_cycle(const Graph& g, const std::vector<int>& c, bool spanning) {
    const int n = g.order();
    if (c.size() < 3) return false;
    if (spanning && static_cast<int>(c.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : c) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!g.adjacent(c[i], c[(i + 1) % c.size()])) return false;
    return true;
}

bool verify_path_cover(const Graph& g, const PathCover& cover) {
    const int n = g.order();
    std::vector<char> seen(n, 0);
    int covered = 0;
    for (const auto& path : cover.paths) {
        if (path.empty()) return false;
        for (std::size_t i = 0; i < path.size(); ++i) {
            const int v = path[i];
            if (v < 0 || v >= n || seen[v]) return false;
            seen[v] = 1;
            ++covered;
            if (i + 1 < path.size() && !g.adjacent(v, path[i + 1])) return false;
        }
    }
    return covered == n;
}

} // namespace prismatic
