// Command-line front end: scenario runner, Hodge tables, level-1 scan,
// extendability check and the bundled self-test.

#include "pobs/error.hpp"
#include "pobs/scenario.hpp"
#include "pobs/singular.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using nlohmann::json;
using pobs::cli::OutputFormat;

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_degree_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--degrees", "expected comma-separated integers, got '" + text + "'");
        }
    }
    if (out.empty()) throw CLI::ValidationError("--degrees", "at least one degree required");
    return out;
}

int emit(const json& report, OutputFormat format) {
    if (format == OutputFormat::Json) {
        std::cout << report.dump(2) << '\n';
    } else {
        std::cout << pobs::cli::render_text(report);
    }
    return report["errors"].empty() ? kExitOk : kExitComputation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perverse obstructions to flat regular compactifications"};
    app.set_version_flag("--version", pobs::cli::kToolVersion);
    app.require_subcommand(1);

    std::string format_name = "text";
    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* analyze = app.add_subcommand("analyze", "Run a scenario file through the full pipeline");
    std::string spec_path;
    std::string matrix_csv;
    analyze->add_option("spec", spec_path, "Scenario JSON")->required();
    analyze->add_option("--dump-matrix", matrix_csv, "Write the defect evaluation matrix as rational CSV");
    add_format(analyze);

    auto* hodge = app.add_subcommand("hodge", "Hodge diamond, Betti vector and level of V_n(d_1..d_k)");
    int hodge_n = 0;
    std::string hodge_degrees;
    hodge->add_option("--n", hodge_n, "Dimension")->required();
    hodge->add_option("--degrees", hodge_degrees, "Comma-separated degrees, e.g. 2,3")->required();
    add_format(hodge);

    auto* scan = app.add_subcommand("scan-level1", "List level-1 complete intersections with odd n in a box");
    pobs::hodge::ScanBox box;
    scan->add_option("--n-max", box.n_max, "Largest odd dimension")->capture_default_str();
    scan->add_option("--d-max", box.d_max, "Largest degree")->capture_default_str();
    scan->add_option("--k-max", box.k_max, "Largest codimension")->capture_default_str();
    add_format(scan);

    auto* extend = app.add_subcommand("extendability", "Is V(f) a hyperplane section of a smooth hypersurface?");
    std::string poly_path;
    std::size_t arity = 0;
    extend->add_option("poly-file", poly_path, "File holding one homogeneous polynomial")->required();
    extend->add_option("--arity", arity, "Number of variables")->required()->check(CLI::PositiveNumber);
    add_format(extend);

    auto* selftest = app.add_subcommand("selftest", "Run bundled goldens and oracle cross-checks");
    std::string scenario_dir = pobs::cli::default_scenario_dir().string();
    selftest->add_option("--scenario-dir", scenario_dir, "Directory with the bundled scenarios")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kExitUsage;
    }
    const OutputFormat format = format_name == "json" ? OutputFormat::Json : OutputFormat::Text;

    try {
        if (*analyze) {
            const auto spec = pobs::cli::load_scenario(spec_path);
            pobs::cli::RunOptions options;
            if (!matrix_csv.empty()) options.matrix_csv = matrix_csv;
            const bool format_given = analyze->count("--format") > 0;
            return emit(pobs::cli::run(spec, options), format_given ? format : spec.format);
        }
        if (*hodge) {
            const pobs::hodge::Multidegree md(hodge_n, parse_degree_list(hodge_degrees));
            if (format == OutputFormat::Json) {
                std::cout << pobs::cli::hodge_json(md).dump(2) << '\n';
            } else {
                std::cout << pobs::cli::hodge_text(md);
            }
            return kExitOk;
        }
        if (*scan) {
            pobs::cli::ScenarioSpec spec;
            spec.name = "scan-level1";
            spec.kind = pobs::cli::ScenarioKind::Level1Scan;
            spec.box = box;
            spec.source = json{{"name", spec.name},
                               {"kind", "level1_scan"},
                               {"box", {{"n_max", box.n_max}, {"d_max", box.d_max}, {"k_max", box.k_max}}}};
            return emit(pobs::cli::run(spec), format);
        }
        if (*extend) {
            std::ifstream in(poly_path);
            if (!in) throw pobs::Error("cli.io", "cannot open " + poly_path);
            std::stringstream text;
            text << in.rdbuf();
            const auto f = pobs::poly::parse_poly(text.str(), arity);
            const auto report = pobs::sing::analyze_singularities(f, {});
            const bool extendable = report.locus_dimension <= 0;
            if (format == OutputFormat::Json) {
                std::cout << json{{"extendable", extendable}, {"locus_dimension", report.locus_dimension}}.dump(2)
                          << '\n';
            } else {
                std::cout << "singular locus dimension: " << report.locus_dimension << '\n'
                          << (extendable ? "extendable: yes (isolated singularities)"
                                         : "extendable: no (non-isolated singularities)")
                          << '\n';
            }
            return kExitOk;
        }
        if (*selftest) {
            bool all = true;
            for (const auto& r : pobs::cli::selftest(scenario_dir)) {
                std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
                all = all && r.pass;
            }
            return all ? kExitOk : kExitComputation;
        }
    } catch (const pobs::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitComputation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitComputation;
    }
    return kExitUsage;
}
