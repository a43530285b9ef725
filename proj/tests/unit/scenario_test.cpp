#include "pobs/error.hpp"
#include "pobs/scenario.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace pobs::cli;
using nlohmann::json;

namespace {

const std::filesystem::path kDir = POBS_SCENARIO_DIR;

json load(const char* name) {
    std::ifstream in(kDir / name);
    return json::parse(in);
}

std::string error_code(auto&& fn) {
    try {
        fn();
    } catch (const pobs::Error& e) {
        return e.code();
    }
    return "";
}

}  // namespace

TEST_CASE("golden: Segre scenario") {
    const auto r = run(load_scenario(kDir / "segre.json"));
    CHECK(r["errors"].empty());
    CHECK(r["singularities"]["node_count"] == 10);
    CHECK(r["singularities"]["complete"] == true);
    CHECK(r["singularities"]["locus_dimension"] == 0);
    CHECK(r["defect"]["defect"] == 5);
    CHECK(r["betti"] == json::parse("[1,0,1,null,6,0,1]"));
    CHECK(r["verdict"]["ih_dims"] == json::parse("[null,5,0,0]"));
    CHECK(r["verdict"]["verdict"] == "NO_IRREDUCIBLE_FIBER_COMPACTIFICATION");
    CHECK(r["extendable"] == true);
}

TEST_CASE("golden: degenerate quadric scenario") {
    const auto r = run(load_scenario(kDir / "degenerate_quadric.json"));
    CHECK(r["errors"].empty());
    CHECK(r["quadric"]["rank"] == 2);
    CHECK(r["betti"] == json::parse("[1,0,1,null,1,0,2]"));
    CHECK(r["verdict"]["verdict"] == "NO_FLAT_COMPACTIFICATION");
    CHECK(r["verdict"]["weakly_palindromic"] == false);
    CHECK(r["ambient"]["veronese_embedding_dimension"] == 20);
    CHECK(r["smooth_family"]["intermediate_jacobian_dimension"] == 20);
}

TEST_CASE("golden: smooth section scenario") {
    const auto r = run(load_scenario(kDir / "smooth_cubic3fold.json"));
    CHECK(r["errors"].empty());
    CHECK(r["betti"] == json::parse("[1,0,1,10,1,0,1]"));
    CHECK(r["verdict"]["verdict"] == "NO_OBSTRUCTION_FOUND");
    CHECK(r["verdict"]["disclaimer"].get<std::string>().find("does not assert") != std::string::npos);
}

TEST_CASE("other bundled scenarios run cleanly") {
    for (const char* name : {"level1_box.json", "v3_2_3.json", "cone_extendability.json"}) {
        CAPTURE(name);
        const auto r = run(load_scenario(kDir / name));
        CHECK(r["errors"].empty());
        CHECK(r["report_schema_version"] == kReportSchemaVersion);
    }
    CHECK(run(load_scenario(kDir / "cone_extendability.json"))["extendable"] == false);
}

TEST_CASE("determinism: identical reports modulo timing") {
    for (const char* name : {"segre.json", "degenerate_quadric.json", "smooth_cubic3fold.json"}) {
        const auto spec = load_scenario(kDir / name);
        CHECK(strip_timing(run(spec)).dump() == strip_timing(run(spec)).dump());
    }
}

TEST_CASE("schema: violations are rejected") {
    auto doc = load("segre.json");

    auto no_hyp = doc;
    no_hyp.erase("hypotheses");
    CHECK(error_code([&] { parse_scenario(no_hyp); }) == "cli.schema");

    auto half_hyp = doc;
    half_hyp["hypotheses"].erase("abelian_scheme");
    CHECK(error_code([&] { parse_scenario(half_hyp); }) == "cli.schema");

    auto extra = doc;
    extra["surprise"] = 1;
    CHECK(error_code([&] { parse_scenario(extra); }) == "cli.schema");

    auto version = doc;
    version["schema_version"] = 2;
    CHECK(error_code([&] { parse_scenario(version); }) == "cli.schema");

    auto kind = doc;
    kind["kind"] = "mystery";
    CHECK(error_code([&] { parse_scenario(kind); }) == "cli.schema");

    auto bad_poly = doc;
    bad_poly["polynomials"][0] = "x0^3 + (x1)";
    CHECK_FALSE(error_code([&] { parse_scenario(bad_poly); }).empty());

    auto flag_type = doc;
    flag_type["hypotheses"]["H_nonconstant"] = "yes";
    CHECK(error_code([&] { parse_scenario(flag_type); }) == "cli.schema");
}

TEST_CASE("run: recoverable step failures land in errors[]") {
    auto doc = load("segre.json");
    doc["candidate_points"].erase(doc["candidate_points"].size() - 1);
    const auto r = run(parse_scenario(doc));
    CHECK_FALSE(r["errors"].empty());
    CHECK(r["singularities"]["complete"] == false);
    CHECK(r["errors"][0]["code"] == "bettisng.unverified_nodes");
}

TEST_CASE("run: matrix dump is exact CSV") {
    const auto path = std::filesystem::temp_directory_path() / "pobs_segre_matrix.csv";
    RunOptions options;
    options.matrix_csv = path;
    run(load_scenario(kDir / "segre.json"), options);
    std::ifstream in(path);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 4);
    }
    CHECK(rows == 10);
    std::filesystem::remove(path);
}

TEST_CASE("text rendering mentions the verdict and the disclaimer") {
    const auto text = render_text(run(load_scenario(kDir / "segre.json")));
    CHECK(text.find("NO_IRREDUCIBLE_FIBER_COMPACTIFICATION") != std::string::npos);
    CHECK(text.find("(1,0,1,?,6,0,1)") != std::string::npos);
    CHECK(text.find("note:") != std::string::npos);
}

TEST_CASE("selftest passes") {
    for (const auto& r : selftest(kDir)) {
        CAPTURE(r.name);
        CAPTURE(r.detail);
        CHECK(r.pass);
    }
}
