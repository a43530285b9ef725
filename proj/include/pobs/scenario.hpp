#ifndef POBS_SCENARIO_HPP
#define POBS_SCENARIO_HPP

#include "pobs/bettisng.hpp"
#include "pobs/hodgeci.hpp"
#include "pobs/obstruct.hpp"

#include <json.hpp>

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pobs::cli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kScenarioSchemaVersion = 1;
inline constexpr int kReportSchemaVersion = 1;

enum class ScenarioKind { HypersurfaceSection, QuadricSection, SmoothCi, Level1Scan, Extendability };
enum class OutputFormat { Text, Json };

std::string to_string(ScenarioKind kind);

struct ScenarioSpec {
    std::string name;
    ScenarioKind kind = ScenarioKind::SmoothCi;
    OutputFormat format = OutputFormat::Json;

    // hypersurface_section, quadric_section, extendability
    std::size_t arity = 0;
    std::vector<int> degrees;
    std::vector<std::string> polynomials;
    std::optional<std::string> hyperplane;
    std::optional<std::size_t> eliminate;
    // Candidate singular points of the section, in ambient coordinates.
    std::vector<std::vector<std::string>> candidate_points;

    // quadric_section
    std::optional<std::string> quadric;
    betti::SectionFlags section_flags;

    // smooth_ci
    std::optional<hodge::Multidegree> multidegree;

    // level1_scan
    hodge::ScanBox box;

    std::optional<obstruct::Hypotheses> hypotheses;

    nlohmann::json source;
};

// Validates against the scenario schema (version 1); throws cli.schema on violation.
ScenarioSpec parse_scenario(const nlohmann::json& document);
ScenarioSpec load_scenario(const std::filesystem::path& path);

struct RunOptions {
    // Destination for the defect evaluation matrix as exact rational CSV.
    std::optional<std::filesystem::path> matrix_csv;
};

// Runs the full pipeline. Step failures that leave later steps meaningful are
// recorded under "errors" instead of aborting.
nlohmann::json run(const ScenarioSpec& spec, const RunOptions& options = {});

// Report without the timing field, for byte comparisons.
nlohmann::json strip_timing(nlohmann::json report);

std::string render_text(const nlohmann::json& report);

nlohmann::json verdict_json(const obstruct::ObstructionVerdict& v);
nlohmann::json betti_json(const BettiVector& b);
nlohmann::json hodge_json(const hodge::Multidegree& md);
std::string hodge_text(const hodge::Multidegree& md);

std::filesystem::path default_scenario_dir();

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

// Bundled goldens plus the Hodge oracle cross-check.
std::vector<CheckResult> selftest(const std::filesystem::path& scenario_dir);

}  // namespace pobs::cli

#endif  // POBS_SCENARIO_HPP
