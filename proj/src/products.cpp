#include "prismatic/products.hpp"

#include <algorithm>
#include <stdexcept>

namespace prismatic {

int BoundedTree::root() const {
    for (std::size_t v = 0; v < parent.size(); ++v)
        if (parent[v] < 0) return static_cast<int>(v);
    throw std::invalid_argument("tree has no root");
}

std::vector<std::vector<int>> BoundedTree::adjacency() const {
    std::vector<std::vector<int>> adj(parent.size());
    for (std::size_t v = 0; v < parent.size(); ++v)
        if (parent[v] >= 0) {
            adj[v].push_back(parent[v]);
            adj[parent[v]].push_back(static_cast<int>(v));
        }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

std::vector<int> BoundedTree::degrees() const {
    std::vector<int> deg(parent.size(), 0);
    for (std::size_t v = 0; v < parent.size(); ++v)
        if (parent[v] >= 0) {
            ++deg[v];
            ++deg[parent[v]];
        }
    return deg;
}

int BoundedTree::max_degree() const {
    const auto deg = degrees();
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

Graph BoundedTree::to_graph() const {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t v = 0; v < parent.size(); ++v)
        if (parent[v] >= 0) edges.emplace_back(static_cast<int>(v), parent[v]);
    return Graph::from_edge_list(order(), edges);
}

BoundedTree BoundedTree::from_edges(int n, const std::vector<std::pair<int, int>>& edges, int bound) {
    if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
    if (static_cast<int>(edges.size()) != n - 1)
        throw std::invalid_argument("a spanning tree has exactly n-1 edges");
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw std::invalid_argument("bad tree edge");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    BoundedTree tree;
    tree.parent.assign(n, -2);
    tree.degree_bound = bound;
    tree.parent[0] = -1;
    std::vector<int> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
        for (int w : adj[queue[qi]])
            if (tree.parent[w] == -2) {
                tree.parent[w] = queue[qi];
                queue.push_back(w);
            }
    if (static_cast<int>(queue.size()) != n)
        throw std::invalid_argument("edges do not span a connected tree");
    if (tree.max_degree() > bound) throw std::invalid_argument("tree exceeds the degree bound");
    return tree;
}

bool validate_walk(const Graph& g, const SpanningWalk& walk) {
    const int n = g.order();
    if (walk.sequence.empty()) return false;
    std::vector<int> visits(n, 0);
    for (int v : walk.sequence) {
        if (v < 0 || v >= n) return false;
        ++visits[v];
    }
    for (int v = 0; v < n; ++v)
        if (visits[v] < 1 || visits[v] > walk.visit_bound) return false;
    for (std::size_t i = 0; i < walk.sequence.size(); ++i)
        if (!g.adjacent(walk.sequence[i], walk.sequence[(i + 1) % walk.sequence.size()]))
            return false;
    return true;
}

SpanningWalk ttree_to_twalk(const BoundedTree& tree) {
    const int n = tree.order();
    if (n < 2) throw std::invalid_argument("ttree_to_twalk requires n >= 2");
    const auto adj = tree.adjacency();
    SpanningWalk walk;
    walk.visit_bound = tree.degree_bound;

    // Preorder tour, re-recording a vertex after each child; the closing
    // wrap replaces the final return to the root, so every vertex appears
    // exactly deg(v) times.
    std::vector<int>& seq = walk.sequence;
    auto tour = [&](auto&& self, int v, int from) -> void {
        seq.push_back(v);
        for (int w : adj[v]) {
            if (w == from) continue;
            self(self, w, v);
            seq.push_back(v);
        }
    };
    tour(tour, tree.root(), -1);
    seq.pop_back();
    return walk;
}

BoundedTree twalk_to_tree(const Graph& g, const SpanningWalk& walk) {
    if (!validate_walk(g, walk)) throw std::invalid_argument("twalk_to_tree: invalid walk");
    const int n = g.order();
    BoundedTree tree;
    tree.parent.assign(n, -2);
    tree.degree_bound = walk.visit_bound + 1;
    tree.parent[walk.sequence[0]] = -1;
    int seen = 1;
    for (std::size_t i = 1; i < walk.sequence.size() && seen < n; ++i) {
        const int v = walk.sequence[i];
        if (tree.parent[v] == -2) {
            tree.parent[v] = walk.sequence[i - 1];
            ++seen;
        }
    }
    if (seen != n) throw std::invalid_argument("twalk_to_tree: walk does not span");
    return tree;
}

bool verify_product_cycle(const Graph& host, const ProductHamCycle& c) {
    const int n = host.order();
    const int t = c.t;
    if (t < 3 || n < 1) return false;
    if (static_cast<int>(c.sequence.size()) != n * t) return false;
    const Graph product = cartesian_cycle(host, t);
    std::vector<char> seen(n * t, 0);
    for (auto [v, level] : c.sequence) {
        if (v < 0 || v >= n || level < 0 || level >= t) return false;
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

ProductHamCycle tree_cycle_ham(const BoundedTree& tree, int t) {
    if (t < 3) throw std::invalid_argument("tree_cycle_ham requires t >= 3");
    const int n = tree.order();
    if (n < 1) throw std::invalid_argument("tree_cycle_ham requires a non-empty tree");
    if (tree.max_degree() > t)
        throw std::invalid_argument("tree_cycle_ham: maximum degree exceeds t (no Hamilton cycle exists)");

    // Peel leaves highest id first; rebuild in reverse, rerouting one used
    // fiber edge of the neighbor through the leaf's entire fiber.
    auto adj = tree.adjacency();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
    std::vector<char> removed(n, 0);
    std::vector<std::pair<int, int>> peel; // (leaf, neighbor)
    for (int round = 0; round + 1 < n; ++round) {
        int leaf = -1;
        for (int v = n - 1; v >= 0; --v)
            if (!removed[v] && deg[v] <= 1) {
                leaf = v;
                break;
            }
        int nbr = -1;
        for (int w : adj[leaf])
            if (!removed[w]) nbr = w;
        peel.emplace_back(leaf, nbr);
        removed[leaf] = 1;
        --deg[nbr];
    }
    int base = -1;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) base = v;

    // Adjacency of the product cycle under construction, keyed by v + level*n.
    std::vector<std::vector<int>> links(n * t);
    auto id = [&](int v, int level) { return v + level * n; };
    auto add = [&](int x, int y) {
        links[x].push_back(y);
        links[y].push_back(x);
    };
    auto drop = [&](int x, int y) {
        std::erase(links[x], y);
        std::erase(links[y], x);
    };
    for (int i = 0; i < t; ++i) add(id(base, i), id(base, (i + 1) % t));

    for (auto it = peel.rbegin(); it != peel.rend(); ++it) {
        const auto [u, v] = *it;
        int fiber = -1;
        for (int i = 0; i < t && fiber < 0; ++i) {
            const int a = id(v, i), b = id(v, (i + 1) % t);
            if (std::find(links[a].begin(), links[a].end(), b) != links[a].end()) fiber = i;
        }
        if (fiber < 0) throw std::logic_error("tree_cycle_ham: no fiber edge available at the neighbor");
        const int i = fiber, j = (i + 1) % t;
        drop(id(v, i), id(v, j));
        add(id(v, i), id(u, i));
        add(id(u, j), id(v, j));
        // The long way around u's fiber from level i to level j.
        for (int k = 0; k < t - 1; ++k) {
            const int from = (i - k + t) % t, to = (i - k - 1 + t) % t;
            add(id(u, from), id(u, to));
        }
    }

    ProductHamCycle cycle;
    cycle.t = t;
    int prev = -1, cur = 0;
    for (int step = 0; step < n * t; ++step) {
        cycle.sequence.push_back(ProductVertex::from_id(cur, n));
        if (links[cur].size() != 2) throw std::logic_error("tree_cycle_ham: broken cycle structure");
        const int a = links[cur][0], b = links[cur][1];
        const int next = (a == prev) ? b : (b == prev ? a : std::min(a, b));
        prev = cur;
        cur = next;
    }
    if (cur != 0) throw std::logic_error("tree_cycle_ham: walk did not close");

    // Fiber invariant: vertex w's fiber keeps at least t - deg(w) fiber edges.
    const auto tree_deg = tree.degrees();
    for (int v = 0; v < n; ++v) {
        int fiber_edges = 0;
        for (int i = 0; i < t; ++i) {
            const int a = id(v, i), b = id(v, (i + 1) % t);
            if (std::find(links[a].begin(), links[a].end(), b) != links[a].end()) ++fiber_edges;
        }
        if (fiber_edges < t - tree_deg[v])
            throw std::logic_error("tree_cycle_ham: fiber invariant violated");
    }
    if (!verify_product_cycle(tree.to_graph(), cycle))
        throw std::logic_error("tree_cycle_ham: verifier rejected the output");
    return cycle;
}

CyclicProductOutcome cyclic_product_certificate(const Graph& g, int t, const Budget& budget) {
    if (t < 3) throw std::invalid_argument("cyclic_product_certificate requires t >= 3");
    if (g.order() < 1) throw std::invalid_argument("cyclic_product_certificate requires n >= 1");
    CyclicProductOutcome outcome;
    outcome.alpha = independence_number(g).alpha;
    outcome.kappa = connectivity(g).kappa;
    if (outcome.alpha > (t - 1) * outcome.kappa) return outcome;
    outcome.applicable = true;

    // The guarantee chain: a (t-1)-walk exists, hence a t-tree; we search the
    // t-tree directly since it is the object the constructor needs.
    const auto tree_edges = bounded_degree_spanning_tree(g, t, budget);
    if (tree_edges.out_of_budget()) throw BudgetExceeded("cyclic_product_certificate: t-tree search");
    if (tree_edges.definitive_none())
        throw TheoremViolation("cyclic_product_certificate: no t-tree under alpha <= (t-1)*kappa");
    const auto tree = BoundedTree::from_edges(g.order(), tree_edges.value(), t);

    outcome.cycle = tree_cycle_ham(tree, t);
    outcome.verified = verify_product_cycle(g, *outcome.cycle);
    return outcome;
}

ToughnessHamReport toughness_hamilton_check(const Graph& g, const Budget& budget) {
    const int n = g.order();
    if (n < 3) throw std::invalid_argument("toughness_hamilton_check requires n >= 3");
    ToughnessHamReport report;

    const auto tough = toughness(g);
    if (tough.infinite) {
        report.complete_graph = true;
        report.pred_hamiltonian = true;
        report.pred_prism_hamiltonian = true;
        report.hamiltonian_confirmed = hamilton_cycle(g, budget).found();
        report.prism_confirmed = report.hamiltonian_confirmed;
        report.note = "complete graph; both predicates hold trivially";
        report.violation = !report.hamiltonian_confirmed;
        return report;
    }

    const Rational t = tough.value;
    const Rational nq(n);
    report.toughness_value = t;
    report.pred_hamiltonian = Rational(2) * t * (t + 1) >= nq;
    report.pred_prism_hamiltonian = Rational(4) * t * (t + 1) >= nq;

    if (report.pred_hamiltonian) {
        const auto hc = hamilton_cycle(g, budget);
        if (hc.out_of_budget()) throw BudgetExceeded("toughness_hamilton_check: Hamilton cycle search");
        report.hamiltonian_confirmed = hc.found();
        if (!report.hamiltonian_confirmed) report.violation = true;
        report.prism_confirmed = report.hamiltonian_confirmed; // a Hamilton cycle yields a path
    } else if (report.pred_prism_hamiltonian) {
        const auto result = prism_ham_certificate(g, budget);
        const bool ok = result.certificate.kind != CertificateKind::refuted_hypothesis &&
                        verify_certificate(g, result.certificate);
        report.prism_confirmed = ok;
        if (!ok) report.violation = true;
    }
    return report;
}

} // namespace prismatic
