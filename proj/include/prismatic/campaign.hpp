#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "prismatic/ce_pipeline.hpp"
#include "prismatic/graph.hpp"
#include "prismatic/oracles.hpp"

namespace prismatic {

enum class CampaignMode { theorem3, prop9, prop10, audit };

std::optional<CampaignMode> parse_campaign_mode(const std::string& name);

/// Input to a campaign: graph6 lines, or a generator spec like
/// "gnp n=12 p=0.5 count=1000 seed=7".
struct GraphSource {
    std::vector<std::string> lines;

    static GraphSource from_stream(std::istream& in);
    static GraphSource from_generator_spec(const std::string& spec);
};

struct CampaignOptions {
    CampaignMode mode = CampaignMode::theorem3;
    int t = 3;    // product parameter for prop9
    int jobs = 1; // parallel workers; record order always matches input order
    bool timings = false;
    std::optional<long long> budget_ms; // per-graph cap
};

struct CampaignReport {
    std::vector<nlohmann::json> records; // one per input line, in input order
    nlohmann::json aggregate;
    int parse_errors = 0;
    bool any_verification_failure = false;
    bool any_gap = false;
    bool any_budget_exhausted = false;

    /// 0 success, 1 verification failure or gap, 2 input error, 3 budget hit.
    int exit_code() const;
    void write_jsonl(std::ostream& out) const;
};

CampaignReport run_campaign(const GraphSource& source, const CampaignOptions& options);

struct CounterexampleReport {
    int k = 0;
    int a = 0;
    int alpha = 0;
    int kappa = 0;
    bool parameters_match = false; // kappa == k and alpha == a
    bool sharp_side = false;       // a > 2k
    bool prism_non_hamiltonian = false;
    int cut_component_count = 0; // components after deleting the 2k degree-(a+1) prism vertices
    bool cut_argument_confirmed = false;
    bool certificate_verified = false; // a <= 2k side
    nlohmann::json to_json() const;
};

/// Builds K_{k,a}; for a > 2k confirms by exhaustive oracle that the prism
/// has no Hamilton cycle and reproduces the deletion argument; for a <= 2k
/// runs the pipeline and verifies the certificate.
CounterexampleReport counterexample_check(int k, int a, const Budget& budget = {});

/// Canonical certificate file: sorted keys, integers only, self-contained
/// with the host graph. Byte-stable across runs.
void emit_certificate(const std::string& path, const Graph& g, const Certificate& c);
std::pair<Graph, Certificate> load_certificate(const std::string& path);

/// Reads PRISMATIC_BUDGET_MS; empty when unset or unparsable.
std::optional<long long> budget_ms_from_env();

} // namespace prismatic
