#include <set>
#include <sstream>

#include "doctest.h"
#include "prismatic/graph.hpp"
#include "prismatic/graph6.hpp"
#include "support.hpp"

using namespace prismatic;

TEST_CASE("graph6 hand-decoded values") {
    // 'A' encodes n=2, '_' = 63+32 carries the single upper-triangle bit set.
    CHECK(parse_graph6("A_") == Graph::from_edge_list(2, {{0, 1}}));
    CHECK(to_graph6(Graph::from_edge_list(2, {{0, 1}})) == "A_");

    CHECK(parse_graph6("@") == empty_graph(1));
    CHECK(to_graph6(empty_graph(0)) == "?");
    CHECK(parse_graph6("?") == empty_graph(0));

    const Graph g = parse_graph6("D?{");
    CHECK(g.order() == 5);
    CHECK(to_graph6(g) == "D?{");
}

TEST_CASE("graph6 round trip") {
    for (int n : {0, 1, 2, 5, 9, 20, 62}) {
        for (int seed = 1; seed <= 4; ++seed) {
            const Graph g = random_gnp(n, 0.4, static_cast<std::uint64_t>(seed) * 1000 + n);
            CHECK(parse_graph6(to_graph6(g)) == g);
        }
    }
    CHECK_THROWS_AS(to_graph6(empty_graph(63)), std::invalid_argument);
}

TEST_CASE("graph6 malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("~??"), std::invalid_argument);    // long form
    CHECK_THROWS_AS(parse_graph6(":Fa@x^"), std::invalid_argument); // sparse6
    CHECK_THROWS_AS(parse_graph6("A"), std::invalid_argument);      // missing body
    CHECK_THROWS_AS(parse_graph6("A_?"), std::invalid_argument);    // trailing garbage
    CHECK_THROWS_AS(parse_graph6("B\x20"), std::invalid_argument);  // data char out of range
    // n=2 needs one bit; the low 5 bits of the body char must be zero.
    CHECK_THROWS_AS(parse_graph6("A!"), std::invalid_argument);
    CHECK_NOTHROW(parse_graph6("A_\n")); // trailing newline tolerated
}

TEST_CASE("fixture streams hold every graph class exactly once") {
    // Non-isomorphic graph counts for n = 2..8.
    const int expected[] = {2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 2; n <= 8; ++n) {
        const auto graphs = testsupport::load_fixture(n);
        CHECK(static_cast<int>(graphs.size()) == expected[n - 2]);
        std::set<std::string> lines;
        for (const Graph& g : graphs) {
            CHECK(g.order() == n);
            lines.insert(to_graph6(g));
        }
        CHECK(lines.size() == graphs.size());
    }
}

TEST_CASE("edge list text round trip") {
    const Graph g = random_gnp(7, 0.5, 5);
    std::stringstream buffer;
    write_edge_list(buffer, g);
    CHECK(read_edge_list(buffer) == g);

    std::istringstream bad("3");
    CHECK_THROWS_AS(read_edge_list(bad), std::invalid_argument);
    std::istringstream truncated("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(truncated), std::invalid_argument);
}
