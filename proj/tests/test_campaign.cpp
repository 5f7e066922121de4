#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "prismatic/campaign.hpp"
#include "prismatic/graph6.hpp"
#include "support.hpp"

using namespace prismatic;

namespace {

std::string report_bytes(const CampaignReport& report) {
    std::ostringstream out;
    report.write_jsonl(out);
    return out.str();
}

GraphSource fixture_source(int n) {
    GraphSource source;
    for (const Graph& g : testsupport::load_fixture(n)) source.lines.push_back(to_graph6(g));
    return source;
}

} // namespace

TEST_CASE("theorem3 campaign over all graphs on 5 vertices") {
    CampaignOptions options;
    options.mode = CampaignMode::theorem3;
    const auto report = run_campaign(fixture_source(5), options);
    CHECK(report.exit_code() == 0);
    CHECK(report.parse_errors == 0);
    CHECK(!report.any_gap);
    CHECK(report.aggregate["record_count"].get<int>() == 34);
    for (const auto& rec : report.records)
        CHECK(rec.at("verified").get<bool>());
}

TEST_CASE("empty input gives an empty report and exit 0") {
    GraphSource source;
    CampaignOptions options;
    const auto report = run_campaign(source, options);
    CHECK(report.exit_code() == 0);
    CHECK(report.records.empty());
}

TEST_CASE("degenerate graphs are skipped, not failed") {
    GraphSource source;
    source.lines = {"?", "@", "A_"}; // 0, 1 and 2 vertices
    for (auto mode : {CampaignMode::theorem3, CampaignMode::prop9, CampaignMode::prop10}) {
        CampaignOptions options;
        options.mode = mode;
        const auto report = run_campaign(source, options);
        CHECK(report.exit_code() == 0);
        CHECK(report.records.size() == 3);
    }
}

TEST_CASE("malformed lines are counted and the run continues") {
    GraphSource source;
    source.lines = {"A_", "!!notgraph6!!", "Bw"};
    CampaignOptions options;
    const auto report = run_campaign(source, options);
    CHECK(report.parse_errors == 1);
    CHECK(report.records.size() == 3);
    CHECK(report.records[1].contains("parse_error"));
    CHECK(report.records[1].at("line").get<int>() == 2);
    CHECK(report.exit_code() == 2);
}

TEST_CASE("generator campaigns are deterministic byte for byte") {
    const auto source = GraphSource::from_generator_spec("gnp n=10 p=0.5 count=40 seed=7");
    const auto source2 = GraphSource::from_generator_spec("gnp n=10 p=0.5 count=40 seed=7");
    CHECK(source.lines == source2.lines);

    CampaignOptions options;
    options.mode = CampaignMode::theorem3;
    const auto a = run_campaign(source, options);
    const auto b = run_campaign(source2, options);
    CHECK(report_bytes(a) == report_bytes(b));
    CHECK(a.exit_code() == 0);
}

TEST_CASE("parallel jobs preserve record order and bytes") {
    const auto source = GraphSource::from_generator_spec("gnp n=9 p=0.45 count=30 seed=11");
    CampaignOptions serial, parallel;
    serial.mode = parallel.mode = CampaignMode::theorem3;
    serial.jobs = 1;
    parallel.jobs = 4;
    CHECK(report_bytes(run_campaign(source, serial)) ==
          report_bytes(run_campaign(source, parallel)));
}

TEST_CASE("audit mode reports never-exercised branches") {
    CampaignOptions options;
    options.mode = CampaignMode::audit;
    const auto report = run_campaign(fixture_source(4), options);
    CHECK(report.aggregate.contains("branch_histogram"));
    CHECK(report.aggregate.contains("never_exercised"));
    for (const auto& tag : all_branch_tags())
        CHECK(report.aggregate["branch_histogram"].contains(tag));
}

TEST_CASE("prop9 and prop10 campaign modes") {
    CampaignOptions p9;
    p9.mode = CampaignMode::prop9;
    p9.t = 3;
    const auto nine = run_campaign(fixture_source(4), p9);
    CHECK(nine.exit_code() == 0);

    CampaignOptions p10;
    p10.mode = CampaignMode::prop10;
    const auto ten = run_campaign(fixture_source(4), p10);
    CHECK(ten.exit_code() == 0);
}

TEST_CASE("counterexample checks") {
    const auto sharp = counterexample_check(2, 5);
    CHECK(sharp.sharp_side);
    CHECK(sharp.parameters_match);
    CHECK(sharp.prism_non_hamiltonian);
    CHECK(sharp.cut_component_count == 5);
    CHECK(sharp.cut_argument_confirmed);

    const auto certified = counterexample_check(2, 4);
    CHECK(!certified.sharp_side);
    CHECK(certified.certificate_verified);

    const auto boundary = counterexample_check(1, 2);
    CHECK(!boundary.sharp_side);
    CHECK(boundary.certificate_verified);

    CHECK_THROWS_AS(counterexample_check(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(counterexample_check(10, 30), std::invalid_argument);
}

TEST_CASE("certificate files round trip and stay byte-identical") {
    const Graph g = complete_bipartite(2, 4);
    const auto result = prism_ham_certificate(g);
    const std::string path = "test_cert_roundtrip.json";
    emit_certificate(path, g, result.certificate);
    const auto [loaded_graph, loaded_cert] = load_certificate(path);
    CHECK(loaded_graph == g);
    CHECK(verify_certificate(loaded_graph, loaded_cert));

    std::ifstream first_file(path, std::ios::binary);
    std::stringstream first;
    first << first_file.rdbuf();
    emit_certificate(path, g, result.certificate);
    std::ifstream second_file(path, std::ios::binary);
    std::stringstream second;
    second << second_file.rdbuf();
    CHECK(first.str() == second.str());
    CHECK(!first.str().empty());
    std::remove(path.c_str());

    CHECK_THROWS(emit_certificate("/nonexistent-dir/cert.json", g, result.certificate));
}

TEST_CASE("exit code priorities") {
    CampaignReport report;
    CHECK(report.exit_code() == 0);
    report.any_budget_exhausted = true;
    CHECK(report.exit_code() == 3);
    report.parse_errors = 1;
    CHECK(report.exit_code() == 2);
    report.any_verification_failure = true;
    CHECK(report.exit_code() == 1);
    report.any_verification_failure = false;
    report.any_gap = true;
    CHECK(report.exit_code() == 1);
}

TEST_CASE("generator spec validation") {
    CHECK_THROWS_AS(GraphSource::from_generator_spec("uniform n=5"), std::invalid_argument);
    CHECK_THROWS_AS(GraphSource::from_generator_spec("gnp n=5"), std::invalid_argument);
    CHECK_THROWS_AS(GraphSource::from_generator_spec("gnp n=5 p=0.5 count=2 bogus=1"),
                    std::invalid_argument);
    const auto ok = GraphSource::from_generator_spec("gnp n=5 p=0.0 count=3 seed=1");
    CHECK(ok.lines.size() == 3);
    for (const auto& line : ok.lines) CHECK(line == to_graph6(empty_graph(5)));
}
