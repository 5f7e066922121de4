#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "prismatic/cactus.hpp"
#include "prismatic/graph.hpp"
#include "prismatic/oracles.hpp"

namespace prismatic {

enum class CertificateKind { hamilton_path, even_cactus, prism_cycle, refuted_hypothesis };

std::string certificate_kind_name(CertificateKind kind);

/// Machine-checkable witness plus the ordered proof-branch tags that
/// produced it.
struct Certificate {
    CertificateKind kind = CertificateKind::refuted_hypothesis;
    std::vector<std::string> trace;

    std::vector<int> path;      // hamilton_path
    EvenCactus cactus;          // even_cactus
    PrismHamCycle prism_cycle;  // prism_cycle
    int alpha = -1;             // refuted_hypothesis
    int kappa = -1;
    std::vector<int> independent_set;
};

/// A configuration the structured constructor failed on; flags a potential
/// oversight in the case analysis. The run still completes via the
/// exhaustive fallback.
struct GapReport {
    std::string graph6;
    std::string stage;
    std::string detail;
};

struct CertificateResult {
    Certificate certificate;
    std::vector<GapReport> gap_reports;
};

/// The alpha <= 2*kappa engine. Dispatch: alpha <= kappa+1 uses a Hamilton
/// path; kappa = 2 (forcing alpha = 4) runs the two-path case ladder;
/// kappa >= 3 attaches cover-path segments to an even cycle. alpha > 2*kappa
/// yields a refuted_hypothesis certificate. Requires n >= 2.
CertificateResult prism_ham_certificate(const Graph& g, const Budget& budget = {});

struct Kappa2Result {
    std::optional<EvenCactus> cactus;
    std::optional<std::vector<int>> hamilton_path;
    std::vector<std::string> trace;
    std::vector<GapReport> gap_reports;
};

/// Case ladder for kappa = 2, alpha = 4: two-path cover, then the claim
/// branches in proof order, each inverted into a constructor. Requires the
/// stated precondition and throws std::invalid_argument otherwise.
Kappa2Result kappa2_cactus(const Graph& g, const Budget& budget = {});

struct Kappa3Result {
    EvenCactus cactus;
    std::vector<std::string> trace;
};

/// Intersections of one directed cover path with a cycle: hit positions
/// along the path (the first is the designated endpoint) and the segments
/// [w_j, x_j], where x_j sits just before the next hit and the last segment
/// reaches the far end of the path. Trivial one-vertex segments included.
struct SegmentAttachment {
    std::vector<int> hits;
    std::vector<std::pair<int, int>> segments;
};

/// Requires path.front() to lie on the cycle (on_cycle indexed by vertex id).
SegmentAttachment attach_segments(const std::vector<int>& path,
                                  const std::vector<char>& on_cycle);

/// kappa >= 3, kappa+2 <= alpha <= 2*kappa: cover by at most alpha-kappa
/// paths, take an even cycle through one endpoint per path, and attach the
/// remaining path segments.
Kappa3Result kappa3_cactus(const Graph& g, const Budget& budget = {});

/// One explicit two-path configuration of the kappa-2 case: oriented cover
/// paths plus the positions of the chosen parallel cross-edge pair, i.e.
/// p1[a1]p2[b1] and p1[a2]p2[b2] are edges with a1 < a2 and b1 < b2.
struct TwoPathConfig {
    std::vector<int> p1, p2;
    int a1 = -1, a2 = -1;
    int b1 = -1, b2 = -1;
};

struct LadderProbe {
    bool succeeded = false;
    std::optional<EvenCactus> cactus;
    std::optional<std::vector<int>> hamilton_path;
    std::string tag;
};

/// Runs the claim ladder on one explicit configuration. kappa2_cactus drives
/// this over all orientations; exposed separately so individual branches can
/// be audited and tested on hand-built configurations.
LadderProbe run_two_path_ladder(const Graph& g, const TwoPathConfig& config);

/// Re-validates the payload with module-independent checkers. Never throws.
bool verify_certificate(const Graph& g, const Certificate& c);

/// Converts a hamilton_path or even_cactus certificate into a prism_cycle
/// certificate by constructive splicing.
Certificate prism_cycle_certificate(const Graph& g, const Certificate& c);

/// Every branch tag the pipeline can emit, for audit histograms.
const std::vector<std::string>& all_branch_tags();

void to_json(nlohmann::json& j, const Certificate& c);
void from_json(const nlohmann::json& j, Certificate& c);
void to_json(nlohmann::json& j, const GapReport& r);

} // namespace prismatic
