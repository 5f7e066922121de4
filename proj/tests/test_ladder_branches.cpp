// Drives the deep kappa-2 claim branches on hand-built two-path
// configurations. Random alpha=4, kappa=2 inputs rarely reach these cases
// (earlier claims fire first), so each executor is pinned here directly.

#include "doctest.h"

#include "prismatic/cactus.hpp"
#include "prismatic/ce_pipeline.hpp"
#include "prismatic/graph.hpp"

using namespace prismatic;

namespace {

struct Fixture {
    Graph g;
    TwoPathConfig config;
};

Fixture make(int n, std::vector<std::pair<int, int>> edges, std::vector<int> p1,
             std::vector<int> p2, int a1, int a2, int b1, int b2) {
    for (auto& p : {p1, p2})
        for (std::size_t i = 0; i + 1 < p.size(); ++i) edges.emplace_back(p[i], p[i + 1]);
    Fixture f;
    f.g = Graph::from_edge_list(n, edges);
    f.config = {std::move(p1), std::move(p2), a1, a2, b1, b2};
    return f;
}

void expect_cactus(const Fixture& f, const std::string& tag) {
    const auto probe = run_two_path_ladder(f.g, f.config);
    REQUIRE(probe.succeeded);
    CHECK(probe.tag == tag);
    REQUIRE(probe.cactus.has_value());
    CHECK(!validate_even_cactus(f.g, *probe.cactus));
    CHECK(verify_prism_cycle(f.g, prism_ham_from_cactus(f.g, *probe.cactus)));
}

} // namespace

TEST_CASE("final sub-case: hook path when a1 = u1") {
    const auto f = make(9, {{0, 5}, {1, 7}, {3, 6}}, {0, 1, 2}, {3, 4, 5, 6, 7, 8}, 0, 1, 2, 4);
    expect_cactus(f, "Case1.Final.hook_path");
}

TEST_CASE("final sub-case 1.1: chord beyond a1 on p1") {
    const auto f = make(11, {{0, 3}, {5, 8}, {2, 7}, {3, 9}}, {0, 1, 2, 3, 4},
                        {5, 6, 7, 8, 9, 10}, 2, 3, 2, 4);
    expect_cactus(f, "Case1.Final.case1_1");
}

TEST_CASE("final sub-case 1.2.1: z = b2, cycle through y and b2 even") {
    const auto f =
        make(10, {{4, 7}, {1, 6}, {2, 8}, {0, 8}}, {0, 1, 2, 3}, {4, 5, 6, 7, 8, 9}, 1, 2, 2, 4);
    expect_cactus(f, "Case1.Final.case1_2_1");
}

TEST_CASE("final sub-case 1.2.1 alternative: the b1..b2 + y..a1 cycle is even") {
    const auto f = make(11, {{5, 8}, {2, 7}, {3, 9}, {0, 9}}, {0, 1, 2, 3, 4},
                        {5, 6, 7, 8, 9, 10}, 2, 3, 2, 4);
    expect_cactus(f, "Case1.Final.case1_2_1_alt");
}

TEST_CASE("final sub-case 1.2.2 alternative: the b1..b2 + y..a2 cycle is even") {
    const auto f =
        make(10, {{4, 7}, {1, 6}, {2, 8}, {0, 6}}, {0, 1, 2, 3}, {4, 5, 6, 7, 8, 9}, 1, 2, 2, 4);
    expect_cactus(f, "Case1.Final.case1_2_2_alt");
}

TEST_CASE("final sub-case 1.2.2: c adjacent to u2") {
    const auto f = make(13, {{7, 10}, {2, 9}, {3, 11}, {0, 9}, {1, 6}}, {0, 1, 2, 3, 4, 5, 6},
                        {7, 8, 9, 10, 11, 12}, 2, 3, 2, 4);
    expect_cactus(f, "Case1.Final.case1_2_2_u2");
}

TEST_CASE("final sub-case 1.2.2: u1-c chord with even cycle") {
    const auto f = make(13, {{7, 10}, {4, 9}, {5, 11}, {2, 9}, {0, 3}}, {0, 1, 2, 3, 4, 5, 6},
                        {7, 8, 9, 10, 11, 12}, 4, 5, 2, 4);
    expect_cactus(f, "Case1.Final.case1_2_2_u1F");
}

TEST_CASE("final sub-case 1.2.2: u1-c chord odd, the long combined cycle is even") {
    const auto f = make(13, {{7, 10}, {3, 9}, {4, 11}, {1, 9}, {0, 2}}, {0, 1, 2, 3, 4, 5, 6},
                        {7, 8, 9, 10, 11, 12}, 3, 4, 2, 4);
    expect_cactus(f, "Case1.Final.case1_2_2_u1W");
}

TEST_CASE("final sub-case 1.2.2: y = u1 and c is its path neighbor") {
    const auto f = make(11, {{5, 8}, {2, 7}, {3, 9}, {0, 7}}, {0, 1, 2, 3, 4},
                        {5, 6, 7, 8, 9, 10}, 2, 3, 2, 4);
    expect_cactus(f, "Case1.Final.case1_2_2_path");
}

TEST_CASE("claim 4: two even cycles joined by the a1-b1 edge") {
    const auto f =
        make(10, {{0, 3}, {1, 6}, {2, 8}, {4, 7}}, {0, 1, 2, 3}, {4, 5, 6, 7, 8, 9}, 1, 2, 2, 4);
    expect_cactus(f, "Case1.Claim4.two_cycles");
}

TEST_CASE("claim 4: hamilton path by entering the p1 cycle from a p2 end") {
    const auto f = make(7, {{0, 3}, {1, 4}, {2, 6}}, {0, 1, 2, 3}, {4, 5, 6}, 1, 2, 0, 2);
    const auto probe = run_two_path_ladder(f.g, f.config);
    REQUIRE(probe.succeeded);
    CHECK(probe.tag == "Case1.Claim4.cycle_path");
    REQUIRE(probe.hamilton_path.has_value());
    CHECK(probe.hamilton_path->size() == 7);
}

TEST_CASE("claim 4 generalized: even chord cycle plus any cross edge into it") {
    const auto f = make(11, {{0, 3}, {1, 6}, {2, 8}, {0, 5}, {6, 9}}, {0, 1, 2, 3},
                        {4, 5, 6, 7, 8, 9, 10}, 1, 2, 2, 4);
    expect_cactus(f, "Case1.Claim4.general");
}

TEST_CASE("ladder probe rejects malformed configurations") {
    const auto f = make(9, {{0, 5}, {1, 7}, {3, 6}}, {0, 1, 2}, {3, 4, 5, 6, 7, 8}, 0, 1, 2, 4);
    TwoPathConfig bad = f.config;
    bad.b2 = 1; // b1 >= b2
    CHECK_THROWS_AS(run_two_path_ladder(f.g, bad), std::invalid_argument);
    TwoPathConfig missing = f.config;
    missing.b1 = 1; // p1[a1]p2[b1] is not an edge
    CHECK_THROWS_AS(run_two_path_ladder(f.g, missing), std::invalid_argument);
}
