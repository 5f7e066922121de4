#include <algorithm>

#include "doctest.h"

#include "prismatic/graph.hpp"
#include "prismatic/invariants.hpp"
#include "prismatic/oracles.hpp"
#include "prismatic/products.hpp"
#include "support.hpp"

using namespace prismatic;

namespace {

BoundedTree tree_from(const Graph& g, int bound) {
    return BoundedTree::from_edges(g.order(), g.edges(), bound);
}

std::vector<Graph> fixture_trees(int n) {
    std::vector<Graph> trees;
    for (const Graph& g : testsupport::load_fixture(n)) {
        if (g.size() != n - 1) continue;
        if (testsupport::naive_components(g, 0) != 1) continue;
        trees.push_back(g);
    }
    return trees;
}

} // namespace

TEST_CASE("ttree_to_twalk examples") {
    const auto path3 = tree_from(path_graph(3), 2);
    const auto walk = ttree_to_twalk(path3);
    CHECK(walk.sequence == std::vector<int>{0, 1, 2, 1});
    CHECK(validate_walk(path3.to_graph(), walk));

    // star rooted at the center: the center appears three times
    const auto star = tree_from(complete_bipartite(1, 3), 3);
    const auto star_walk = ttree_to_twalk(star);
    CHECK(std::count(star_walk.sequence.begin(), star_walk.sequence.end(), 0) == 3);
    CHECK(validate_walk(star.to_graph(), star_walk));

    // a Hamilton path is a 2-tree and yields a 2-walk
    const auto p6 = tree_from(path_graph(6), 2);
    const auto walk6 = ttree_to_twalk(p6);
    CHECK(walk6.visit_bound == 2);
    CHECK(validate_walk(p6.to_graph(), walk6));
}

TEST_CASE("visit counts equal tree degrees") {
    for (int n = 2; n <= 8; ++n)
        for (const Graph& t : fixture_trees(n)) {
            const auto tree = tree_from(t, 8);
            const auto walk = ttree_to_twalk(tree);
            const auto deg = tree.degrees();
            for (int v = 0; v < n; ++v)
                CHECK(std::count(walk.sequence.begin(), walk.sequence.end(), v) == deg[v]);
        }
}

TEST_CASE("twalk_to_tree examples") {
    // Hamilton cycle as a 1-walk gives a Hamilton path (a 2-tree).
    const Graph c6 = cycle_graph(6);
    SpanningWalk one_walk{{0, 1, 2, 3, 4, 5}, 1};
    const auto tree = twalk_to_tree(c6, one_walk);
    CHECK(tree.max_degree() <= 2);
    CHECK(tree.degree_bound == 2);

    const Graph p3 = path_graph(3);
    SpanningWalk back{{0, 1, 2, 1}, 2};
    CHECK(twalk_to_tree(p3, back).to_graph() == p3);

    SpanningWalk invalid{{0, 2, 1}, 2};
    CHECK_THROWS_AS(twalk_to_tree(p3, invalid), std::invalid_argument);
}

TEST_CASE("walk round trips degrade by at most one") {
    testsupport::TestRng rng(555);
    int rounds = 0;
    for (int seed = 1; seed <= 80; ++seed) {
        const Graph g = random_gnp(8, 0.5, 600 + seed);
        const auto edges = bounded_degree_spanning_tree(g, 3);
        if (!edges.found()) continue;
        const auto tree = BoundedTree::from_edges(g.order(), edges.value(), 3);
        const auto walk = ttree_to_twalk(tree);
        CHECK(validate_walk(g, walk));
        const auto back = twalk_to_tree(g, walk);
        CHECK(back.max_degree() <= 4); // t+1
        ++rounds;
    }
    CHECK(rounds > 20);
    (void)rng;
}

TEST_CASE("tree_cycle_ham base and small cases") {
    const auto single = tree_cycle_ham(tree_from(empty_graph(1), 1), 3);
    CHECK(single.sequence.size() == 3);
    CHECK(verify_product_cycle(empty_graph(1), single));

    const Graph k2 = Graph::from_edge_list(2, {{0, 1}});
    const auto k2cycle = tree_cycle_ham(tree_from(k2, 1), 3);
    CHECK(k2cycle.sequence.size() == 6);
    CHECK(verify_product_cycle(k2, k2cycle));

    CHECK_THROWS_AS(tree_cycle_ham(tree_from(complete_bipartite(1, 4), 4), 3),
                    std::invalid_argument);
}

TEST_CASE("tree-product construction both directions on all small trees") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& t : fixture_trees(n)) {
            const auto tree = tree_from(t, t.order());
            for (int tt : {3, 4}) {
                if (tree.max_degree() <= tt) {
                    const auto cycle = tree_cycle_ham(tree, tt);
                    CHECK(verify_product_cycle(t, cycle));
                } else {
                    CHECK_THROWS_AS(tree_cycle_ham(tree, tt), std::invalid_argument);
                    const auto oracle = hamilton_cycle(cartesian_cycle(t, tt));
                    CHECK(oracle.definitive_none());
                }
            }
        }
    }
}

TEST_CASE("cyclic_product_certificate") {
    const auto k24 = cyclic_product_certificate(complete_bipartite(2, 4), 3);
    CHECK(k24.applicable);
    CHECK(k24.verified);
    CHECK(k24.cycle->sequence.size() == 18);

    const auto c5 = cyclic_product_certificate(cycle_graph(5), 3);
    CHECK(c5.applicable);
    CHECK(c5.verified);
    CHECK(c5.cycle->sequence.size() == 15);

    const auto k25 = cyclic_product_certificate(complete_bipartite(2, 5), 3);
    CHECK(!k25.applicable);
    CHECK(!k25.cycle.has_value());
}

TEST_CASE("toughness_hamilton_check") {
    const auto c4 = toughness_hamilton_check(cycle_graph(4));
    CHECK(c4.toughness_value == Rational(1));
    CHECK(c4.pred_hamiltonian);
    CHECK(c4.hamiltonian_confirmed);
    CHECK(!c4.violation);

    const auto k24 = toughness_hamilton_check(complete_bipartite(2, 4));
    CHECK(k24.toughness_value == Rational(1, 2));
    CHECK(!k24.pred_hamiltonian);
    CHECK(!k24.pred_prism_hamiltonian);
    CHECK(!k24.violation);

    const auto k5 = toughness_hamilton_check(complete_graph(5));
    CHECK(k5.complete_graph);
    CHECK(k5.hamiltonian_confirmed);
    CHECK(!k5.violation);

    CHECK_THROWS_AS(toughness_hamilton_check(path_graph(2)), std::invalid_argument);
}
