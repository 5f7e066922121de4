#include "prismatic/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace prismatic {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("self-loop not allowed");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.m_ = 0;
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        g.m_ += static_cast<int>(list.size());
    }
    g.m_ /= 2;
    return g;
}

bool Graph::adjacent(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    return adj_.at(v);
}

int Graph::degree(int v) const {
    return static_cast<int>(adj_.at(v).size());
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph prism(const Graph& g) {
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(u + n, v + n);
    }
    for (int u = 0; u < n; ++u) edges.emplace_back(u, u + n);
    return Graph::from_edge_list(2 * n, edges);
}

Graph cartesian_cycle(const Graph& g, int t) {
    if (t < 3) throw std::invalid_argument("cartesian_cycle requires t >= 3");
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < t; ++i)
        for (auto [u, v] : g.edges())
            edges.emplace_back(u + i * n, v + i * n);
    for (int u = 0; u < n; ++u)
        for (int i = 0; i < t; ++i)
            edges.emplace_back(u + i * n, u + ((i + 1) % t) * n);
    return Graph::from_edge_list(t * n, edges);
}

Graph cartesian_complete(const Graph& g, int t) {
    if (t < 2) throw std::invalid_argument("cartesian_complete requires t >= 2");
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < t; ++i)
        for (auto [u, v] : g.edges())
            edges.emplace_back(u + i * n, v + i * n);
    for (int u = 0; u < n; ++u)
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j)
                edges.emplace_back(u + i * n, u + j * n);
    return Graph::from_edge_list(t * n, edges);
}

Graph complete_bipartite(int k, int a) {
    if (k < 1 || a < 1) throw std::invalid_argument("complete_bipartite parts must be non-empty");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = 0; v < a; ++v)
            edges.emplace_back(u, k + v);
    return Graph::from_edge_list(k + a, edges);
}

Graph empty_graph(int n) {
    return Graph::from_edge_list(n, {});
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
    if (n < 0) throw std::invalid_argument("complete_graph requires n >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph petersen_graph() {
    // Outer 5-cycle 0..4, spokes, inner pentagram 5..9.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph::from_edge_list(10, edges);
}

Graph named_graph(const std::string& name) {
    if (name == "petersen") return petersen_graph();
    auto parse_arg = [&](const std::string& prefix) -> int {
        std::string inner = name.substr(prefix.size() + 1, name.size() - prefix.size() - 2);
        return std::stoi(inner);
    };
    auto has_form = [&](const std::string& prefix) {
        return name.size() > prefix.size() + 2 && name.compare(0, prefix.size(), prefix) == 0 &&
               name[prefix.size()] == '(' && name.back() == ')';
    };
    if (has_form("cycle")) return cycle_graph(parse_arg("cycle"));
    if (has_form("path")) return path_graph(parse_arg("path"));
    if (has_form("complete")) return complete_graph(parse_arg("complete"));
    throw std::invalid_argument("unknown graph name: " + name);
}

namespace {

// xorshift64*: x ^= x>>12; x ^= x<<25; x ^= x>>27; return x * 2685821657736338717.
// Zero seeds are remapped so the state never locks at zero.
struct Xorshift64Star {
    std::uint64_t state;
    explicit Xorshift64Star(std::uint64_t seed)
        : state(seed ? seed : 0x9E3779B97F4A7C15ULL) {}
    std::uint64_t next() {
        std::uint64_t x = state;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state = x;
        return x * 0x2545F4914F6CDD1DULL;
    }
    // Uniform in [0, 1) from the top 53 bits; exact on every IEEE platform.
    double uniform01() {
        return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0);
    }
};

} // namespace

Graph random_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability out of [0,1]");
    Xorshift64Star rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform01() < p) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

} // namespace prismatic
