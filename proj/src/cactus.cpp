#include "prismatic/cactus.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace prismatic {

namespace {

std::pair<int, int> norm_edge(int a, int b) { return a < b ? std::make_pair(a, b) : std::make_pair(b, a); }

// Edges of one component: cyclic for cycles, linear for paths.
std::vector<std::pair<int, int>> component_edges(const std::vector<int>& verts, bool cyclic) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) out.push_back(norm_edge(verts[i], verts[i + 1]));
    if (cyclic && verts.size() >= 3) out.push_back(norm_edge(verts.back(), verts.front()));
    return out;
}

} // namespace

std::optional<CactusViolation> validate_even_cactus(const Graph& g, const EvenCactus& h) {
    const int n = g.order();
    auto fail = [](std::string clause, std::string detail) {
        return CactusViolation{std::move(clause), std::move(detail)};
    };

    // shape: well-formed components with in-range, non-repeating vertices
    const bool single_vertex_cactus =
        h.cycles.empty() && h.paths.size() == 1 && h.paths[0].size() == 1 && n == 1;
    for (const auto& c : h.cycles) {
        if (c.size() < 3) return fail("shape", "cycle with fewer than 3 vertices");
        std::set<int> distinct(c.begin(), c.end());
        if (distinct.size() != c.size()) return fail("shape", "repeated vertex in a cycle");
        for (int v : c)
            if (v < 0 || v >= n) return fail("shape", "cycle vertex out of range");
    }
    for (const auto& p : h.paths) {
        if (p.empty()) return fail("shape", "empty path");
        if (p.size() == 1 && !single_vertex_cactus)
            return fail("shape", "singleton path outside the single-vertex cactus");
        std::set<int> distinct(p.begin(), p.end());
        if (distinct.size() != p.size()) return fail("shape", "repeated vertex in a path");
        for (int v : p)
            if (v < 0 || v >= n) return fail("shape", "path vertex out of range");
    }

    // Union graph over all listed components.
    std::map<std::pair<int, int>, int> edge_count;
    std::vector<char> in_union(n, 0);
    auto absorb = [&](const std::vector<int>& verts, bool cyclic) {
        for (int v : verts) in_union[v] = 1;
        for (auto e : component_edges(verts, cyclic)) ++edge_count[e];
    };
    for (const auto& c : h.cycles) absorb(c, true);
    for (const auto& p : h.paths) absorb(p, false);

    std::vector<std::vector<int>> union_adj(n);
    for (const auto& [e, cnt] : edge_count) {
        union_adj[e.first].push_back(e.second);
        union_adj[e.second].push_back(e.first);
    }

    // connectivity
    int first = -1;
    for (int v = 0; v < n && first < 0; ++v)
        if (in_union[v]) first = v;
    if (first >= 0) {
        std::vector<char> seen(n, 0);
        seen[first] = 1;
        std::vector<int> queue{first};
        for (std::size_t qi = 0; qi < queue.size(); ++qi)
            for (int w : union_adj[queue[qi]])
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        for (int v = 0; v < n; ++v)
            if (in_union[v] && !seen[v]) return fail("connectivity", "union is disconnected");
    }

    // span
    for (int v = 0; v < n; ++v)
        if (!in_union[v]) return fail("span", "vertex " + std::to_string(v) + " not covered");

    // degree
    for (int v = 0; v < n; ++v)
        if (union_adj[v].size() > 3)
            return fail("degree", "vertex " + std::to_string(v) + " has degree > 3");

    // cycle space rank: |E| - |V| + 1 must equal the number of listed cycles
    if (n > 0) {
        const long long rank = static_cast<long long>(edge_count.size()) - n + 1;
        if (rank != static_cast<long long>(h.cycles.size()))
            return fail("cycle_rank", "union has cycle rank " + std::to_string(rank) +
                                          ", expected " + std::to_string(h.cycles.size()));
    }

    // evenness
    for (const auto& c : h.cycles)
        if (c.size() % 2 != 0) return fail("evenness", "odd cycle of length " + std::to_string(c.size()));

    // disjointness: cycles pairwise, paths pairwise, path-cycle only at path
    // endpoints, and no edge listed twice
    std::vector<int> cycle_of(n, -1);
    for (std::size_t i = 0; i < h.cycles.size(); ++i)
        for (int v : h.cycles[i]) {
            if (cycle_of[v] >= 0) return fail("disjointness", "cycles share vertex " + std::to_string(v));
            cycle_of[v] = static_cast<int>(i);
        }
    std::vector<int> path_of(n, -1);
    for (std::size_t i = 0; i < h.paths.size(); ++i)
        for (int v : h.paths[i]) {
            if (path_of[v] >= 0) return fail("disjointness", "paths share vertex " + std::to_string(v));
            path_of[v] = static_cast<int>(i);
        }
    for (const auto& p : h.paths)
        for (std::size_t i = 1; i + 1 < p.size(); ++i)
            if (cycle_of[p[i]] >= 0)
                return fail("disjointness", "path interior vertex " + std::to_string(p[i]) + " lies on a cycle");
    for (const auto& [e, cnt] : edge_count)
        if (cnt > 1)
            return fail("disjointness", "edge (" + std::to_string(e.first) + "," +
                                            std::to_string(e.second) + ") listed in two components");

    // membership
    for (const auto& [e, cnt] : edge_count)
        if (!g.adjacent(e.first, e.second))
            return fail("membership", "(" + std::to_string(e.first) + "," + std::to_string(e.second) +
                                          ") is not an edge of the host graph");

    return std::nullopt;
}

CactusTree cactus_tree(const EvenCactus& h) {
    const int s = static_cast<int>(h.cycles.size());
    const int total = s + static_cast<int>(h.paths.size());
    if (total == 0) throw std::invalid_argument("cactus_tree: empty cactus");

    std::map<int, int> cycle_of;
    for (int i = 0; i < s; ++i)
        for (int v : h.cycles[i]) {
            if (cycle_of.count(v)) throw std::invalid_argument("cactus_tree: cycles share a vertex");
            cycle_of[v] = i;
        }

    std::vector<std::vector<std::pair<int, int>>> adj(total); // (other component, shared vertex)
    int link_count = 0;
    for (std::size_t i = 0; i < h.paths.size(); ++i) {
        const int pc = s + static_cast<int>(i);
        const auto& p = h.paths[i];
        std::vector<int> ends{p.front()};
        if (p.size() > 1) ends.push_back(p.back());
        for (int e : ends) {
            auto it = cycle_of.find(e);
            if (it != cycle_of.end()) {
                adj[it->second].emplace_back(pc, e);
                adj[pc].emplace_back(it->second, e);
                ++link_count;
            }
        }
    }
    if (link_count != total - 1)
        throw std::invalid_argument("cactus_tree: components do not form a tree");

    CactusTree tree;
    tree.component_count = total;
    tree.cycle_count = s;
    tree.root = 0;
    std::vector<char> seen(total, 0);
    seen[0] = 1;
    std::vector<int> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const int c = queue[qi];
        for (auto [other, shared] : adj[c])
            if (!seen[other]) {
                seen[other] = 1;
                tree.edges.push_back({c, other, shared});
                queue.push_back(other);
            }
    }
    if (static_cast<int>(tree.edges.size()) != total - 1)
        throw std::invalid_argument("cactus_tree: components are disconnected");
    return tree;
}

namespace {

// Two-slot adjacency over prism vertices; every vertex of a Hamilton cycle
// has exactly two neighbors.
struct CycleLinks {
    std::vector<std::array<int, 2>> slot;

    explicit CycleLinks(int size) : slot(size, {-1, -1}) {}

    void add(int a, int b) {
        link(a, b);
        link(b, a);
    }
    void link(int a, int b) {
        if (slot[a][0] < 0)
            slot[a][0] = b;
        else if (slot[a][1] < 0)
            slot[a][1] = b;
        else
            throw std::logic_error("splice: vertex degree exceeded 2");
    }
    void remove(int a, int b) {
        unlink(a, b);
        unlink(b, a);
    }
    void unlink(int a, int b) {
        if (slot[a][0] == b)
            slot[a][0] = slot[a][1], slot[a][1] = -1;
        else if (slot[a][1] == b)
            slot[a][1] = -1;
        else
            throw std::logic_error("splice: removing a missing edge");
    }
};

} // namespace

PrismHamCycle prism_ham_from_cactus(const Graph& g, const EvenCactus& h) {
    if (auto violation = validate_even_cactus(g, h))
        throw std::invalid_argument("invalid even cactus (" + violation->clause + "): " + violation->detail);
    const int n = g.order();
    if (n < 2)
        throw std::invalid_argument("prism Hamilton cycle undefined for hosts with fewer than 2 vertices");

    const CactusTree tree = cactus_tree(h);
    const int s = tree.cycle_count;
    CycleLinks links(2 * n);

    // Staircase over an even cycle: uses the vertical edge of every block
    // vertex and alternates the level of consecutive cycle edges.
    auto install_cycle_block = [&](const std::vector<int>& c, int skip_vertical) {
        const int len = static_cast<int>(c.size());
        for (int v : c)
            if (v != skip_vertical) links.add(v, v + n);
        for (int i = 0; i < len; ++i) {
            const int a = c[i], b = c[(i + 1) % len];
            const int level = (i % 2 == 0) ? 1 : 0;
            links.add(a + level * n, b + level * n);
        }
    };
    // Down-and-back loop over a path: vertical edges at both endpoints only.
    auto install_path_block = [&](const std::vector<int>& p, int skip_vertical) {
        if (p.front() != skip_vertical) links.add(p.front(), p.front() + n);
        if (p.back() != skip_vertical) links.add(p.back(), p.back() + n);
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            links.add(p[i], p[i + 1]);
            links.add(p[i] + n, p[i + 1] + n);
        }
    };
    auto install = [&](int comp, int skip_vertical) {
        if (comp < s)
            install_cycle_block(h.cycles[comp], skip_vertical);
        else
            install_path_block(h.paths[comp - s], skip_vertical);
    };

    auto component_size = [&](int comp) {
        return 2 * static_cast<int>(comp < s ? h.cycles[comp].size() : h.paths[comp - s].size());
    };
    // After every merge the structure must still be one closed cycle over
    // all installed prism vertices.
    auto check_closed_cycle = [&](int start, int expected) {
        int prev = -1, cur = start, steps = 0;
        do {
            const auto [a, b] = links.slot[cur];
            if (a < 0 || b < 0) throw std::logic_error("splice: open cycle after a merge");
            const int next = (a == prev) ? b : (b == prev ? a : std::min(a, b));
            prev = cur;
            cur = next;
            ++steps;
        } while (cur != start && steps <= expected);
        if (steps != expected) throw std::logic_error("splice: merge broke the cycle");
    };

    install(tree.root, -1);
    int installed = component_size(tree.root);
    check_closed_cycle(h.cycles.empty() ? h.paths[0][0] : h.cycles[0][0], installed);
    for (const auto& e : tree.edges) {
        // Both block cycles contain the shared vertical edge; consume it once.
        links.remove(e.shared_vertex, e.shared_vertex + n);
        install(e.child, e.shared_vertex);
        installed += component_size(e.child) - 2; // the shared vertex was counted once already
        check_closed_cycle(e.shared_vertex, installed);
    }

    PrismHamCycle cycle;
    cycle.sequence.reserve(2 * n);
    int prev = -1, cur = 0;
    for (int step = 0; step < 2 * n; ++step) {
        cycle.sequence.push_back(ProductVertex::from_id(cur, n));
        const auto [a, b] = links.slot[cur];
        if (a < 0 || b < 0) throw std::logic_error("splice: open cycle");
        const int next = (a == prev) ? b : (b == prev ? a : std::min(a, b));
        prev = cur;
        cur = next;
    }
    if (cur != 0) throw std::logic_error("splice: walk did not close");
    if (!verify_prism_cycle(g, cycle)) throw std::logic_error("splice: verifier rejected the output");
    return cycle;
}

bool verify_prism_cycle(const Graph& g, const PrismHamCycle& c) {
    const int n = g.order();
    const Graph product = prism(g);
    if (static_cast<int>(c.sequence.size()) != 2 * n || n < 2) return false;
    std::vector<char> seen(2 * n, 0);
    for (auto [v, level] : c.sequence) {
        if (v < 0 || v >= n || level < 0 || level > 1) return false;
        const int id = v + level * n;
        if (seen[id]) return false;
        seen[id] = 1;
    }
    for (std::size_t i = 0; i < c.sequence.size(); ++i) {
        const ProductVertex a = c.sequence[i];
        const ProductVertex b = c.sequence[(i + 1) % c.sequence.size()];
        if (!product.adjacent(a.id(n), b.id(n))) return false;
    }
    return true;
}

void to_json(nlohmann::json& j, const EvenCactus& h) {
    j = nlohmann::json{{"cycles", h.cycles}, {"paths", h.paths}};
}

void from_json(const nlohmann::json& j, EvenCactus& h) {
    j.at("cycles").get_to(h.cycles);
    j.at("paths").get_to(h.paths);
}

void to_json(nlohmann::json& j, const PrismHamCycle& c) {
    j = nlohmann::json::array();
    for (auto [v, level] : c.sequence) j.push_back(nlohmann::json::array({v, level}));
}

void from_json(const nlohmann::json& j, PrismHamCycle& c) {
    c.sequence.clear();
    for (const auto& item : j)
        c.sequence.push_back(ProductVertex{item.at(0).get<int>(), item.at(1).get<int>()});
}

} // namespace prismatic
