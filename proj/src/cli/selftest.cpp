#include "pobs/scenario.hpp"

#include "pobs/error.hpp"

namespace pobs::cli {

using nlohmann::json;

namespace {

CheckResult check_golden(const std::filesystem::path& dir, const std::string& file,
                         const std::function<std::string(const json&)>& mismatch) {
    try {
        const json report = run(load_scenario(dir / file));
        std::string why = mismatch(report);
        if (why.empty() && !report["errors"].empty()) why = "errors: " + report["errors"].dump();
        return {file, why.empty(), why.empty() ? "ok" : why};
    } catch (const std::exception& e) {
        return {file, false, e.what()};
    }
}

std::string expect(const json& actual, const json& wanted, const std::string& what) {
    return actual == wanted ? "" : what + " = " + actual.dump() + ", expected " + wanted.dump();
}

}  // namespace

std::vector<CheckResult> selftest(const std::filesystem::path& dir) {
    std::vector<CheckResult> results;

    results.push_back(check_golden(dir, "segre.json", [](const json& r) {
        std::string why = expect(r["verdict"]["verdict"], "NO_IRREDUCIBLE_FIBER_COMPACTIFICATION", "verdict");
        if (why.empty()) why = expect(r["singularities"]["node_count"], 10, "nodes");
        if (why.empty()) why = expect(r["singularities"]["complete"], true, "complete");
        if (why.empty()) why = expect(r["defect"]["defect"], 5, "defect");
        if (why.empty()) why = expect(r["betti"][4], 6, "b_4");
        return why;
    }));
    results.push_back(check_golden(dir, "degenerate_quadric.json", [](const json& r) {
        std::string why = expect(r["verdict"]["verdict"], "NO_FLAT_COMPACTIFICATION", "verdict");
        if (why.empty()) why = expect(r["quadric"]["rank"], 2, "rank");
        if (why.empty()) why = expect(r["betti"][6], 2, "b_6");
        if (why.empty()) why = expect(r["smooth_family"]["betti"][3], 40, "b_3(V_3(2,3))");
        if (why.empty()) why = expect(r["ambient"]["veronese_embedding_dimension"], 20, "|O(2)|");
        return why;
    }));
    results.push_back(check_golden(dir, "smooth_cubic3fold.json", [](const json& r) {
        std::string why = expect(r["verdict"]["verdict"], "NO_OBSTRUCTION_FOUND", "verdict");
        if (why.empty()) why = expect(r["betti"], json::array({1, 0, 1, 10, 1, 0, 1}), "betti");
        return why;
    }));

    // HRR against the Jacobian-ring count for hypersurfaces.
    std::string disagreements;
    int cases = 0;
    for (int d = 2; d <= 6; ++d) {
        for (int n = 1; n <= 6; ++n) {
            ++cases;
            const auto diamond = hodge::hodge_diamond(hodge::Multidegree(n, {d}));
            const auto oracle = hodge::griffiths_middle_hodge(d, n);
            for (int p = 0; p <= n; ++p) {
                if (diamond.primitive_middle(p) != oracle[static_cast<std::size_t>(p)]) {
                    disagreements += " V_" + std::to_string(n) + "(" + std::to_string(d) + ") p=" + std::to_string(p);
                }
            }
        }
    }
    results.push_back({"hodge oracle (" + std::to_string(cases) + " hypersurfaces)", disagreements.empty(),
                       disagreements.empty() ? "ok" : "mismatch:" + disagreements});
    return results;
}

}  // namespace pobs::cli
