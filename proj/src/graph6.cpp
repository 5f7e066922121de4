#include "prismatic/graph6.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace prismatic {

namespace {
constexpr int kBias = 63;
constexpr int kMaxShortN = 62;
} // namespace

Graph parse_graph6(std::string_view line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r' ||
                             line.back() == ' ' || line.back() == '\t'))
        line.remove_suffix(1);
    if (line.empty()) throw std::invalid_argument("graph6: empty line");

    const unsigned char head = static_cast<unsigned char>(line[0]);
    if (head == ':' || head == ';' || head == '&')
        throw std::invalid_argument("graph6: sparse6/digraph6 variants not supported");
    if (head == 126)
        throw std::invalid_argument("graph6: long form (n > 62) not supported");
    if (head < kBias || head > kBias + kMaxShortN)
        throw std::invalid_argument("graph6: header character out of range");

    const int n = head - kBias;
    const int bits = n * (n - 1) / 2;
    const int body_chars = (bits + 5) / 6;
    if (static_cast<int>(line.size()) - 1 != body_chars)
        throw std::invalid_argument("graph6: body length mismatch");

    std::vector<std::pair<int, int>> edges;
    int bit_index = 0;
    for (int k = 0; k < body_chars; ++k) {
        const unsigned char c = static_cast<unsigned char>(line[1 + k]);
        if (c < kBias || c > kBias + 63)
            throw std::invalid_argument("graph6: data character out of range");
        const int chunk = c - kBias;
        for (int b = 5; b >= 0; --b, ++bit_index) {
            const bool set = (chunk >> b) & 1;
            if (bit_index >= bits) {
                if (set) throw std::invalid_argument("graph6: nonzero padding bits");
                continue;
            }
            if (set) {
                // Column order: bit t corresponds to the pair (i, j) with
                // j minimal such that j(j-1)/2 > t.
                int j = 1;
                while ((j * (j + 1)) / 2 <= bit_index) ++j;
                int i = bit_index - j * (j - 1) / 2;
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph::from_edge_list(n, edges);
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kMaxShortN)
        throw std::invalid_argument("graph6: short form supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(n + kBias));
    const int bits = n * (n - 1) / 2;
    int chunk = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (bits % 6 != 0) {
        chunk <<= (6 - bits % 6);
        out.push_back(static_cast<char>(chunk + kBias));
    }
    return out;
}

Graph read_edge_list(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing \"n m\" header");
    if (m < 0) throw std::invalid_argument("edge list: negative edge count");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated edge lines");
        edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

} // namespace prismatic
