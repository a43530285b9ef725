// Runs the pobs binary as a subprocess and checks the exit-code contract and
// the documented console output.

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct Outcome {
    int code;
    std::string out;
};

Outcome run(const std::string& args) {
    const std::string cmd = std::string("\"") + POBS_BINARY + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), static_cast<int>(buf.size()), pipe) != nullptr) out += buf.data();
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string scenario(const char* name) { return std::string("\"") + POBS_SCENARIO_DIR + "/" + name + "\""; }

std::string strip_timing(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    j.erase("timing_ms");
    return j.dump();
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run("").code == 2);
    CHECK(run("--no-such-flag").code == 2);
    CHECK(run("bogus").code == 2);
    CHECK(run("hodge --n 3").code == 2);
    CHECK(run("hodge --n 3 --degrees 2,3 --format xml").code == 2);
    CHECK(run("analyze /nonexistent/spec.json").code == 1);
    CHECK(run("hodge --n 3 --degrees 1").code == 1);
    CHECK(run("analyze " + scenario("segre.json")).code == 0);
    CHECK(run("--version").code == 0);
}

TEST_CASE("hodge prints b_3 = 40 and level 1 for V_3(2,3)") {
    const auto r = run("hodge --n 3 --degrees 2,3");
    CHECK(r.code == 0);
    CHECK(r.out.find("b_3  = 40") != std::string::npos);
    CHECK(r.out.find("level = 1") != std::string::npos);

    const auto j = nlohmann::json::parse(run("hodge --n 3 --degrees 2,3 --format json").out);
    CHECK(j["betti"][3] == 40);
    CHECK(j["level"] == "1");
}

TEST_CASE("scan-level1 in the smallest box lists only V_3(3)") {
    const auto j = nlohmann::json::parse(run("scan-level1 --n-max 3 --d-max 3 --k-max 1 --format json").out);
    CHECK(j["level1_families"] == nlohmann::json::parse(R"j(["V_3(3)"])j"));
}

TEST_CASE("extendability of the Segre cubic and of the cone") {
    const auto segre = run("extendability " + scenario("segre_cubic.poly") + " --arity 5");
    CHECK(segre.code == 0);
    CHECK(segre.out.find("extendable: yes (isolated singularities)") != std::string::npos);
    const auto cone = run("extendability " + scenario("cone_cubic.poly") + " --arity 5");
    CHECK(cone.code == 0);
    CHECK(cone.out.find("extendable: no") != std::string::npos);
}

TEST_CASE("goldens through the binary, deterministic modulo timing") {
    const struct {
        const char* file;
        const char* verdict;
    } goldens[] = {{"segre.json", "NO_IRREDUCIBLE_FIBER_COMPACTIFICATION"},
                   {"degenerate_quadric.json", "NO_FLAT_COMPACTIFICATION"},
                   {"smooth_cubic3fold.json", "NO_OBSTRUCTION_FOUND"}};
    for (const auto& g : goldens) {
        CAPTURE(g.file);
        const auto a = run("analyze " + scenario(g.file) + " --format json");
        const auto b = run("analyze " + scenario(g.file) + " --format json");
        REQUIRE(a.code == 0);
        CHECK(nlohmann::json::parse(a.out)["verdict"]["verdict"] == g.verdict);
        CHECK(strip_timing(a.out) == strip_timing(b.out));
    }
}

TEST_CASE("selftest subcommand") {
    const auto r = run("selftest --scenario-dir \"" POBS_SCENARIO_DIR "\"");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
}
