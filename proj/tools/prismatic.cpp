#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "prismatic/campaign.hpp"
#include "prismatic/graph6.hpp"
#include "prismatic/invariants.hpp"

using namespace prismatic;

namespace {

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string content = buffer.str();
    std::istringstream first_line_stream(content);
    std::string first_line;
    std::getline(first_line_stream, first_line);
    try {
        return parse_graph6(first_line);
    } catch (const std::exception&) {
        std::istringstream edges(content);
        return read_edge_list(edges);
    }
}

std::string rational_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"prismatic: certified prism-Hamiltonicity toolkit"};
    app.require_subcommand(1);

    // verify
    std::string mode_name = "theorem3", input_file, gen_spec, report_file;
    int t_param = 3, jobs = 1;
    bool timings = false;
    auto* verify = app.add_subcommand("verify", "run a verification campaign over a graph6 stream");
    verify->add_option("--mode", mode_name, "theorem3|prop9|prop10|audit")->required();
    verify->add_option("--t", t_param, "product parameter for prop9");
    auto* input_opt = verify->add_option("--input", input_file, "graph6 lines, one graph per line");
    verify->add_option("--gen", gen_spec, "generator spec, e.g. \"gnp n=12 p=0.5 count=1000 seed=7\"")
        ->excludes(input_opt);
    verify->add_option("--report", report_file, "JSON-lines report path (default stdout)");
    verify->add_option("--jobs", jobs, "parallel workers");
    verify->add_flag("--timings", timings, "include per-graph runtimes (breaks byte determinism)");

    // check-kab
    int kab_k = 0, kab_a = 0;
    auto* check = app.add_subcommand("check-kab", "sharpness check for the complete bipartite family");
    check->add_option("K", kab_k)->required();
    check->add_option("A", kab_a)->required();

    // invariants
    std::string inv_input;
    auto* inv = app.add_subcommand("invariants", "alpha, kappa, toughness per input graph");
    inv->add_option("--input", inv_input, "graph6 lines")->required();

    // cert
    std::string cert_graph, cert_out;
    auto* cert = app.add_subcommand("cert", "produce and store one certificate");
    cert->add_option("--graph", cert_graph, "graph file (graph6 line or edge-list text)")->required();
    cert->add_option("--out", cert_out, "certificate output path")->required();

    CLI11_PARSE(app, argc, argv);

    const auto env_budget = budget_ms_from_env();
    try {
        if (verify->parsed()) {
            const auto mode = parse_campaign_mode(mode_name);
            if (!mode) {
                std::cerr << "unknown mode: " << mode_name << '\n';
                return 2;
            }
            if (*mode == CampaignMode::prop9 && t_param < 3) {
                std::cerr << "prop9 requires --t >= 3\n";
                return 2;
            }
            GraphSource source;
            if (!gen_spec.empty()) {
                source = GraphSource::from_generator_spec(gen_spec);
            } else if (!input_file.empty()) {
                std::ifstream in(input_file);
                if (!in) {
                    std::cerr << "cannot open " << input_file << '\n';
                    return 2;
                }
                source = GraphSource::from_stream(in);
            } else {
                source = GraphSource::from_stream(std::cin);
            }
            CampaignOptions options;
            options.mode = *mode;
            options.t = t_param;
            options.jobs = jobs;
            options.timings = timings;
            options.budget_ms = env_budget;
            const CampaignReport report = run_campaign(source, options);
            if (!report_file.empty()) {
                std::ofstream out(report_file, std::ios::binary);
                if (!out) {
                    std::cerr << "cannot open " << report_file << '\n';
                    return 2;
                }
                report.write_jsonl(out);
            } else {
                report.write_jsonl(std::cout);
            }
            return report.exit_code();
        }

        if (check->parsed()) {
            const Budget budget = env_budget ? Budget::from_ms(*env_budget) : Budget::unlimited();
            const auto report = counterexample_check(kab_k, kab_a, budget);
            std::cout << report.to_json().dump(2) << '\n';
            const bool ok = report.sharp_side
                                ? report.prism_non_hamiltonian && report.cut_argument_confirmed
                                : report.certificate_verified;
            return ok ? 0 : 1;
        }

        if (inv->parsed()) {
            std::ifstream in(inv_input);
            if (!in) {
                std::cerr << "cannot open " << inv_input << '\n';
                return 2;
            }
            const auto source = GraphSource::from_stream(in);
            int parse_errors = 0;
            for (std::size_t i = 0; i < source.lines.size(); ++i) {
                nlohmann::json rec;
                try {
                    const Graph g = parse_graph6(source.lines[i]);
                    const auto params = graph_params(g);
                    rec["graph6"] = source.lines[i];
                    rec["n"] = params.n;
                    rec["alpha"] = params.alpha;
                    rec["kappa"] = params.kappa;
                    if (params.toughness)
                        rec["toughness"] = params.toughness->infinite
                                               ? nlohmann::json("inf")
                                               : nlohmann::json(rational_string(params.toughness->value));
                    else
                        rec["toughness"] = nullptr;
                } catch (const std::exception& e) {
                    rec["line"] = static_cast<int>(i + 1);
                    rec["parse_error"] = e.what();
                    ++parse_errors;
                }
                std::cout << rec.dump() << '\n';
            }
            return parse_errors > 0 ? 2 : 0;
        }

        if (cert->parsed()) {
            const Graph g = read_graph_file(cert_graph);
            const Budget budget = env_budget ? Budget::from_ms(*env_budget) : Budget::unlimited();
            const auto result = prism_ham_certificate(g, budget);
            emit_certificate(cert_out, g, result.certificate);
            const bool ok = verify_certificate(g, result.certificate);
            std::cerr << "kind: " << certificate_kind_name(result.certificate.kind)
                      << ", verified: " << (ok ? "true" : "false") << '\n';
            for (const auto& gap : result.gap_reports) {
                nlohmann::json j = gap;
                std::cerr << "gap: " << j.dump() << '\n';
            }
            return ok && result.gap_reports.empty() ? 0 : 1;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
