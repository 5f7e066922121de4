// Enumerates all graphs on n vertices up to isomorphism and prints one
// canonically-labeled graph6 line per class. Works by extending the classes
// on n-1 vertices by one vertex with every neighbor subset, deduplicating by
// the lexicographically minimal upper-triangle code over all labelings.
// Intended for small n (fixture generation); counts match the known sequence
// 1, 2, 4, 11, 34, 156, 1044, 12346 for n = 1..8.

#include <algorithm>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "prismatic/graph.hpp"
#include "prismatic/graph6.hpp"

namespace {

using Code = std::string; // upper-triangle bits in column order, '0'/'1'

struct Canonicalizer {
    int n;
    std::vector<std::vector<char>> adj;
    Code best;
    std::vector<int> perm;
    std::vector<char> used;
    Code cur;

    Code run() {
        // best stays fixed within one pass; each pass either proves
        // minimality or finds a strictly smaller code and restarts.
        best = code_for_identity();
        while (true) {
            perm.assign(n, -1);
            used.assign(n, 0);
            cur.clear();
            cur.reserve(best.size());
            if (!place(0, 0)) break;
        }
        return best;
    }

    Code code_for_identity() const {
        Code code;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) code.push_back(adj[i][j] ? '1' : '0');
        return code;
    }

    // relation: -1 when cur is already strictly below best, 0 when tied.
    // Returns true when a strictly smaller code was installed into best.
    bool place(int k, int relation) {
        if (k == n) {
            if (relation < 0) {
                best = cur;
                return true;
            }
            return false;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            int rel = relation;
            bool prune = false;
            const std::size_t mark = cur.size();
            for (int i = 0; i < k; ++i) {
                const char bit = adj[perm[i]][v] ? '1' : '0';
                cur.push_back(bit);
                if (rel == 0) {
                    const char ref = best[cur.size() - 1];
                    if (bit < ref) {
                        rel = -1;
                    } else if (bit > ref) {
                        prune = true;
                        break;
                    }
                }
            }
            bool improved = false;
            if (!prune) {
                used[v] = 1;
                perm[k] = v;
                improved = place(k + 1, rel);
                used[v] = 0;
            }
            cur.resize(mark);
            if (improved) return true;
        }
        return false;
    }
};

Code canonical_code(int n, const std::vector<std::vector<char>>& adj) {
    Canonicalizer c{n, adj, {}, {}, {}, {}};
    return c.run();
}

std::vector<std::vector<char>> adjacency_from_code(int n, const Code& code) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::size_t idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx) adj[i][j] = adj[j][i] = code[idx] == '1';
    return adj;
}

prismatic::Graph graph_from_code(int n, const Code& code) {
    std::vector<std::pair<int, int>> edges;
    std::size_t idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++idx)
            if (code[idx] == '1') edges.emplace_back(i, j);
    return prismatic::Graph::from_edge_list(n, edges);
}

std::set<Code> all_classes(int n) {
    std::set<Code> level{Code{}}; // the single graph on one vertex
    for (int size = 2; size <= n; ++size) {
        std::set<Code> next;
        for (const Code& parent : level) {
            const auto parent_adj = adjacency_from_code(size - 1, parent);
            for (unsigned subset = 0; subset < (1u << (size - 1)); ++subset) {
                std::vector<std::vector<char>> adj(size, std::vector<char>(size, 0));
                for (int i = 0; i < size - 1; ++i)
                    for (int j = 0; j < size - 1; ++j) adj[i][j] = parent_adj[i][j];
                for (int i = 0; i < size - 1; ++i)
                    if ((subset >> i) & 1) adj[i][size - 1] = adj[size - 1][i] = 1;
                next.insert(canonical_code(size, adj));
            }
        }
        level = std::move(next);
    }
    return level;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen-small-graphs N   (prints all graphs on N vertices, one per class)\n";
        return 2;
    }
    const int n = std::atoi(argv[1]);
    if (n < 1 || n > 9) {
        std::cerr << "N must be between 1 and 9\n";
        return 2;
    }
    for (const auto& code : all_classes(n))
        std::cout << prismatic::to_graph6(graph_from_code(n, code)) << '\n';
    return 0;
}
