#include "prismatic/campaign.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <thread>

#include "prismatic/graph6.hpp"
#include "prismatic/invariants.hpp"
#include "prismatic/products.hpp"

namespace prismatic {

namespace {

std::string rational_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

nlohmann::json toughness_json(const Graph& g) {
    if (g.order() > 16) return nullptr;
    const auto tough = toughness(g);
    if (tough.infinite) return "inf";
    return rational_string(tough.value);
}

Budget make_budget(const CampaignOptions& options) {
    return options.budget_ms ? Budget::from_ms(*options.budget_ms) : Budget::unlimited();
}

struct RecordOutcome {
    nlohmann::json record;
    bool verification_failure = false;
    bool gap = false;
    bool budget_exhausted = false;
};

RecordOutcome theorem3_record(const Graph& g, const std::string& g6, const CampaignOptions& options) {
    RecordOutcome out;
    nlohmann::json& rec = out.record;
    rec["graph6"] = g6;
    rec["n"] = g.order();
    if (g.order() < 2) {
        rec["kind"] = "skipped_small";
        rec["verified"] = true;
        return out;
    }
    rec["alpha"] = independence_number(g).alpha;
    rec["kappa"] = connectivity(g).kappa;
    rec["toughness"] = toughness_json(g);
    try {
        const auto result = prism_ham_certificate(g, make_budget(options));
        const bool ok = verify_certificate(g, result.certificate);
        rec["kind"] = certificate_kind_name(result.certificate.kind);
        rec["trace"] = result.certificate.trace;
        rec["verified"] = ok;
        rec["gaps"] = result.gap_reports;
        out.verification_failure = !ok;
        out.gap = !result.gap_reports.empty();
    } catch (const BudgetExceeded& e) {
        rec["kind"] = "budget_exhausted";
        rec["verified"] = false;
        rec["error"] = e.what();
        out.budget_exhausted = true;
    } catch (const std::exception& e) {
        rec["kind"] = "error";
        rec["verified"] = false;
        rec["error"] = e.what();
        out.verification_failure = true;
    }
    return out;
}

RecordOutcome prop9_record(const Graph& g, const std::string& g6, const CampaignOptions& options) {
    RecordOutcome out;
    nlohmann::json& rec = out.record;
    rec["graph6"] = g6;
    rec["n"] = g.order();
    rec["t"] = options.t;
    if (g.order() < 1) {
        rec["skipped"] = "empty graph";
        rec["verified"] = true;
        return out;
    }
    try {
        const auto outcome = cyclic_product_certificate(g, options.t, make_budget(options));
        rec["alpha"] = outcome.alpha;
        rec["kappa"] = outcome.kappa;
        rec["applicable"] = outcome.applicable;
        rec["verified"] = !outcome.applicable || outcome.verified;
        out.verification_failure = outcome.applicable && !outcome.verified;
    } catch (const BudgetExceeded& e) {
        rec["verified"] = false;
        rec["error"] = e.what();
        out.budget_exhausted = true;
    } catch (const std::exception& e) {
        rec["verified"] = false;
        rec["error"] = e.what();
        out.verification_failure = true;
    }
    return out;
}

RecordOutcome prop10_record(const Graph& g, const std::string& g6, const CampaignOptions& options) {
    RecordOutcome out;
    nlohmann::json& rec = out.record;
    rec["graph6"] = g6;
    rec["n"] = g.order();
    if (g.order() < 3 || g.order() > 16) {
        rec["skipped"] = g.order() < 3 ? "n < 3" : "toughness cap n <= 16";
        rec["verified"] = true;
        return out;
    }
    try {
        const auto report = toughness_hamilton_check(g, make_budget(options));
        rec["complete"] = report.complete_graph;
        rec["toughness"] = report.complete_graph ? nlohmann::json("inf")
                                                 : nlohmann::json(rational_string(report.toughness_value));
        rec["pred_hamiltonian"] = report.pred_hamiltonian;
        rec["pred_prism_hamiltonian"] = report.pred_prism_hamiltonian;
        rec["hamiltonian_confirmed"] = report.hamiltonian_confirmed;
        rec["prism_confirmed"] = report.prism_confirmed;
        rec["verified"] = !report.violation;
        out.verification_failure = report.violation;
    } catch (const BudgetExceeded& e) {
        rec["verified"] = false;
        rec["error"] = e.what();
        out.budget_exhausted = true;
    } catch (const std::exception& e) {
        rec["verified"] = false;
        rec["error"] = e.what();
        out.verification_failure = true;
    }
    return out;
}

} // namespace

std::optional<CampaignMode> parse_campaign_mode(const std::string& name) {
    if (name == "theorem3") return CampaignMode::theorem3;
    if (name == "prop9") return CampaignMode::prop9;
    if (name == "prop10") return CampaignMode::prop10;
    if (name == "audit") return CampaignMode::audit;
    return std::nullopt;
}

GraphSource GraphSource::from_stream(std::istream& in) {
    GraphSource source;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (!line.empty()) source.lines.push_back(line);
    }
    return source;
}

GraphSource GraphSource::from_generator_spec(const std::string& spec) {
    std::istringstream in(spec);
    std::string kind;
    in >> kind;
    if (kind != "gnp") throw std::invalid_argument("unknown generator spec: " + spec);
    int n = -1, count = -1;
    double p = -1.0;
    std::uint64_t seed = 0;
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad generator token: " + token);
        const std::string key = token.substr(0, eq), value = token.substr(eq + 1);
        if (key == "n")
            n = std::stoi(value);
        else if (key == "p")
            p = std::stod(value);
        else if (key == "count")
            count = std::stoi(value);
        else if (key == "seed")
            seed = std::stoull(value);
        else
            throw std::invalid_argument("unknown generator key: " + key);
    }
    if (n < 0 || count < 0 || p < 0.0) throw std::invalid_argument("generator spec needs n, p, count");

    GraphSource source;
    for (int i = 0; i < count; ++i)
        source.lines.push_back(to_graph6(random_gnp(n, p, seed + static_cast<std::uint64_t>(i))));
    return source;
}

int CampaignReport::exit_code() const {
    if (any_verification_failure || any_gap) return 1;
    if (parse_errors > 0) return 2;
    if (any_budget_exhausted) return 3;
    return 0;
}

void CampaignReport::write_jsonl(std::ostream& out) const {
    for (const auto& record : records) out << record.dump() << '\n';
    out << aggregate.dump() << '\n';
}

CampaignReport run_campaign(const GraphSource& source, const CampaignOptions& options) {
    CampaignReport report;
    const std::size_t count = source.lines.size();
    std::vector<RecordOutcome> outcomes(count);
    std::vector<long long> elapsed_ms(count, 0);

    auto work = [&](std::size_t index) {
        const std::string& line = source.lines[index];
        const auto started = std::chrono::steady_clock::now();
        Graph g;
        try {
            g = parse_graph6(line);
        } catch (const std::exception& e) {
            RecordOutcome out;
            out.record["line"] = static_cast<int>(index + 1);
            out.record["parse_error"] = e.what();
            out.record["input"] = line;
            outcomes[index] = std::move(out);
            return;
        }
        try {
            switch (options.mode) {
                case CampaignMode::theorem3:
                case CampaignMode::audit:
                    outcomes[index] = theorem3_record(g, line, options);
                    break;
                case CampaignMode::prop9:
                    outcomes[index] = prop9_record(g, line, options);
                    break;
                case CampaignMode::prop10:
                    outcomes[index] = prop10_record(g, line, options);
                    break;
            }
        } catch (const std::exception& e) {
            RecordOutcome out;
            out.record["graph6"] = line;
            out.record["verified"] = false;
            out.record["error"] = e.what();
            out.verification_failure = true;
            outcomes[index] = std::move(out);
        }
        elapsed_ms[index] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - started)
                                .count();
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back([&] {
                while (true) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= count) break;
                    work(i);
                }
            });
        for (auto& thread : pool) thread.join();
    }

    std::map<std::string, int> branch_counts;
    int verified_count = 0, hypothesis_count = 0;
    std::vector<nlohmann::json> gaps;
    for (std::size_t i = 0; i < count; ++i) {
        auto& outcome = outcomes[i];
        if (outcome.record.contains("parse_error")) {
            ++report.parse_errors;
        } else {
            if (options.timings) outcome.record["runtime_ms"] = elapsed_ms[i];
            report.any_verification_failure |= outcome.verification_failure;
            report.any_gap |= outcome.gap;
            report.any_budget_exhausted |= outcome.budget_exhausted;
            if (outcome.record.contains("verified") && outcome.record["verified"].is_boolean() &&
                outcome.record["verified"].get<bool>())
                ++verified_count;
            if (outcome.record.contains("trace"))
                for (const auto& tag : outcome.record["trace"]) branch_counts[tag.get<std::string>()] += 1;
            if (outcome.record.contains("kind") &&
                (outcome.record["kind"] == "hamilton_path" || outcome.record["kind"] == "even_cactus" ||
                 outcome.record["kind"] == "prism_cycle"))
                ++hypothesis_count;
            if (outcome.record.contains("gaps"))
                for (const auto& gap : outcome.record["gaps"]) gaps.push_back(gap);
        }
        report.records.push_back(std::move(outcome.record));
    }

    report.aggregate["record_count"] = static_cast<int>(count);
    report.aggregate["parse_errors"] = report.parse_errors;
    report.aggregate["verified_count"] = verified_count;
    report.aggregate["hypothesis_satisfied_count"] = hypothesis_count;
    report.aggregate["gap_reports"] = gaps;
    if (options.mode == CampaignMode::audit || options.mode == CampaignMode::theorem3) {
        nlohmann::json histogram = nlohmann::json::object();
        if (options.mode == CampaignMode::audit)
            for (const auto& tag : all_branch_tags()) histogram[tag] = 0;
        for (const auto& [tag, n] : branch_counts) histogram[tag] = n;
        report.aggregate["branch_histogram"] = histogram;
        if (options.mode == CampaignMode::audit) {
            std::vector<std::string> never;
            for (const auto& tag : all_branch_tags())
                if (branch_counts.find(tag) == branch_counts.end()) never.push_back(tag);
            report.aggregate["never_exercised"] = never;
        }
    }
    return report;
}

CounterexampleReport counterexample_check(int k, int a, const Budget& budget) {
    if (k < 1 || a < 1) throw std::invalid_argument("counterexample_check requires k, a >= 1");
    if (2 * (k + a) > 32)
        throw std::invalid_argument("counterexample_check: size budget exceeded (prism order > 32)");

    CounterexampleReport report;
    report.k = k;
    report.a = a;
    const Graph g = complete_bipartite(k, a);
    report.alpha = independence_number(g).alpha;
    report.kappa = connectivity(g).kappa;
    report.parameters_match = report.kappa == k && report.alpha == a;
    report.sharp_side = a > 2 * k;

    if (report.sharp_side) {
        const Graph pg = prism(g);
        const auto hc = hamilton_cycle(pg, budget);
        if (hc.out_of_budget()) throw BudgetExceeded("counterexample_check: prism search");
        report.prism_non_hamiltonian = hc.definitive_none();

        // The deletion argument: removing the 2k prism vertices of degree a+1
        // (both copies of the small side) leaves exactly a components.
        std::vector<char> removed(pg.order(), 0);
        int removed_count = 0;
        for (int v = 0; v < pg.order(); ++v)
            if (pg.degree(v) == a + 1) {
                removed[v] = 1;
                ++removed_count;
            }
        int comps = 0;
        std::vector<char> seen(pg.order(), 0);
        for (int v = 0; v < pg.order(); ++v) {
            if (removed[v] || seen[v]) continue;
            ++comps;
            std::vector<int> queue{v};
            seen[v] = 1;
            for (std::size_t qi = 0; qi < queue.size(); ++qi)
                for (int w : pg.neighbors(queue[qi]))
                    if (!seen[w] && !removed[w]) {
                        seen[w] = 1;
                        queue.push_back(w);
                    }
        }
        report.cut_component_count = comps;
        report.cut_argument_confirmed = removed_count == 2 * k && comps == a;
    } else {
        const auto result = prism_ham_certificate(g, budget);
        report.certificate_verified =
            result.certificate.kind != CertificateKind::refuted_hypothesis &&
            verify_certificate(g, result.certificate) && result.gap_reports.empty();
    }
    return report;
}

nlohmann::json CounterexampleReport::to_json() const {
    nlohmann::json j;
    j["k"] = k;
    j["a"] = a;
    j["alpha"] = alpha;
    j["kappa"] = kappa;
    j["parameters_match"] = parameters_match;
    j["sharp_side"] = sharp_side;
    if (sharp_side) {
        j["prism_non_hamiltonian"] = prism_non_hamiltonian;
        j["cut_component_count"] = cut_component_count;
        j["cut_argument_confirmed"] = cut_argument_confirmed;
    } else {
        j["certificate_verified"] = certificate_verified;
    }
    return j;
}

void emit_certificate(const std::string& path, const Graph& g, const Certificate& c) {
    nlohmann::json j;
    j["graph6"] = to_graph6(g);
    j["certificate"] = c;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed for " + path);
}

std::pair<Graph, Certificate> load_certificate(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    in >> j;
    return {parse_graph6(j.at("graph6").get<std::string>()), j.at("certificate").get<Certificate>()};
}

std::optional<long long> budget_ms_from_env() {
    const char* raw = std::getenv("PRISMATIC_BUDGET_MS");
    if (!raw) return std::nullopt;
    try {
        return std::stoll(raw);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

} // namespace prismatic
