#pragma once

// Test-side oracles, deliberately naive and independent of the library's
// search code: plain subset/permutation enumeration only.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "prismatic/cactus.hpp"
#include "prismatic/graph.hpp"
#include "prismatic/graph6.hpp"
#include "prismatic/invariants.hpp"

namespace testsupport {

using prismatic::EvenCactus;
using prismatic::Graph;
using prismatic::Rational;

inline int naive_alpha(const Graph& g) {
    const int n = g.order();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (int u = 0; u < n && independent; ++u)
            for (int v = u + 1; v < n && independent; ++v)
                if (((mask >> u) & 1) && ((mask >> v) & 1) && g.adjacent(u, v)) independent = false;
        if (independent) best = std::max(best, std::popcount(mask));
    }
    return best;
}

inline int naive_components(const Graph& g, std::uint32_t removed) {
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

// Minimum vertex-set size whose deletion disconnects; n-1 for complete graphs.
inline int naive_kappa(const Graph& g) {
    const int n = g.order();
    int best = n - 1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) >= n - 1) continue;
        if (naive_components(g, mask) >= 2) best = std::min(best, std::popcount(mask));
    }
    return best;
}

inline std::optional<Rational> naive_toughness(const Graph& g) {
    const int n = g.order();
    std::optional<Rational> best;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) >= n) continue;
        const int comps = naive_components(g, mask);
        if (comps < 2) continue;
        const Rational ratio(std::popcount(mask), comps);
        if (!best || ratio < *best) best = ratio;
    }
    return best; // nullopt = complete graph
}

// Permutation-enumeration Hamiltonicity ground truth (fix vertex 0 first).
inline bool naive_hamiltonian(const Graph& g) {
    const int n = g.order();
    if (n < 3) return false;
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
        bool ok = g.adjacent(0, rest.front()) && g.adjacent(rest.back(), 0);
        for (std::size_t i = 0; ok && i + 1 < rest.size(); ++i)
            if (!g.adjacent(rest[i], rest[i + 1])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return false;
}

inline bool naive_has_hamilton_path(const Graph& g) {
    const int n = g.order();
    if (n == 1) return true;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; ok && i + 1 < n; ++i)
            if (!g.adjacent(perm[i], perm[i + 1])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

inline std::vector<Graph> load_fixture(int n) {
    const std::string path = std::string(FIXTURE_DIR) + "/graphs_n" + std::to_string(n) + ".g6";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing fixture " + path);
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) graphs.push_back(prismatic::parse_graph6(line));
    return graphs;
}

// Same xorshift64* recurrence as the library, reimplemented here so test
// streams stay stable even if the library generator changes.
struct TestRng {
    std::uint64_t state;
    explicit TestRng(std::uint64_t seed) : state(seed ? seed : 0x9E3779B97F4A7C15ULL) {}
    std::uint64_t next() {
        std::uint64_t x = state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state = x;
        return x * 0x2545F4914F6CDD1DULL;
    }
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
};

// Random valid even cactus: a tree of even cycles joined by paths, grown one
// block at a time. The host graph is the union itself. Caps at n_target.
inline std::pair<Graph, EvenCactus> random_even_cactus(TestRng& rng, int n_target) {
    EvenCactus cactus;
    int next_vertex = 0;
    std::vector<int> open_cycle_vertices; // cycle vertices of degree 2
    std::vector<int> free_path_ends;      // path leaves not on any cycle

    auto new_cycle = [&](std::optional<int> attach) {
        const int half = 2 + rng.below(3); // cycle length 4, 6, or 8
        std::vector<int> cycle;
        if (attach) cycle.push_back(*attach);
        while (static_cast<int>(cycle.size()) < 2 * half) cycle.push_back(next_vertex++);
        cactus.cycles.push_back(cycle);
        for (int v : cycle) open_cycle_vertices.push_back(v);
        if (attach)
            open_cycle_vertices.erase(
                std::find(open_cycle_vertices.begin(), open_cycle_vertices.end(), *attach));
    };
    auto new_path = [&](int attach) {
        const int len = 1 + rng.below(3); // 1..3 edges
        std::vector<int> path{attach};
        for (int i = 0; i < len; ++i) path.push_back(next_vertex++);
        cactus.paths.push_back(path);
        free_path_ends.push_back(path.back());
    };

    if (rng.below(4) == 0) {
        // A bare spanning path (no cycles at all).
        const int len = 1 + rng.below(n_target - 1);
        std::vector<int> path;
        for (int i = 0; i <= len; ++i) path.push_back(next_vertex++);
        cactus.paths.push_back(path);
    } else {
        new_cycle(std::nullopt);
        while (next_vertex < n_target - 9) {
            const bool grow_cycle = !free_path_ends.empty() && rng.below(2) == 0;
            if (grow_cycle) {
                const int pick = rng.below(static_cast<int>(free_path_ends.size()));
                const int attach = free_path_ends[pick];
                free_path_ends.erase(free_path_ends.begin() + pick);
                new_cycle(attach);
            } else if (!open_cycle_vertices.empty()) {
                const int pick = rng.below(static_cast<int>(open_cycle_vertices.size()));
                const int attach = open_cycle_vertices[pick];
                open_cycle_vertices.erase(open_cycle_vertices.begin() + pick);
                new_path(attach);
            } else {
                break;
            }
        }
    }

    std::vector<std::pair<int, int>> edges;
    for (const auto& c : cactus.cycles)
        for (std::size_t i = 0; i < c.size(); ++i) edges.emplace_back(c[i], c[(i + 1) % c.size()]);
    for (const auto& p : cactus.paths)
        for (std::size_t i = 0; i + 1 < p.size(); ++i) edges.emplace_back(p[i], p[i + 1]);
    return {Graph::from_edge_list(next_vertex, edges), cactus};
}

} // namespace testsupport
