#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "prismatic/graph.hpp"

namespace prismatic {

/// Spanning even cactus certificate: pairwise vertex-disjoint even cycles
/// plus pairwise vertex-disjoint paths whose union is connected, spans the
/// host, has maximum degree 3, and contains no cycles beyond the listed
/// ones. Paths meet cycles only at path endpoints.
struct EvenCactus {
    std::vector<std::vector<int>> cycles;
    std::vector<std::vector<int>> paths;
};

struct CactusViolation {
    std::string clause; // which invariant failed first
    std::string detail;
};

/// Checks every invariant independently and reports the first violated
/// clause: shape, connectivity, span, degree, cycle_rank, evenness,
/// disjointness, membership.
std::optional<CactusViolation> validate_even_cactus(const Graph& g, const EvenCactus& h);

/// Tree of cactus components (cycles first, then paths, in listed order),
/// rooted at component 0. Each tree edge records the shared attachment
/// vertex. Throws std::invalid_argument when the components do not form a tree.
struct CactusTree {
    struct Edge {
        int parent;
        int child;
        int shared_vertex;
    };
    int component_count = 0;
    int cycle_count = 0;
    int root = 0;
    std::vector<Edge> edges; // in BFS order from the root
};

CactusTree cactus_tree(const EvenCactus& h);

/// Hamilton cycle of prism(g) as a cyclic (vertex, level) sequence.
struct PrismHamCycle {
    std::vector<ProductVertex> sequence;
};

/// Constructive splicing: even-cycle blocks contribute the staircase cycle
/// (which uses every vertical edge of the block), path blocks the
/// down-and-back loop (vertical edges at both ends), and blocks merge along
/// the cactus tree by consuming one shared vertical edge per tree edge.
/// Never searches. Throws std::invalid_argument on an invalid cactus or a
/// single-vertex host.
PrismHamCycle prism_ham_from_cactus(const Graph& g, const EvenCactus& h);

/// Independent re-check against prism(g); shares no code with the constructor.
bool verify_prism_cycle(const Graph& g, const PrismHamCycle& c);

void to_json(nlohmann::json& j, const EvenCactus& h);
void from_json(const nlohmann::json& j, EvenCactus& h);
void to_json(nlohmann::json& j, const PrismHamCycle& c);
void from_json(const nlohmann::json& j, PrismHamCycle& c);

} // namespace prismatic
