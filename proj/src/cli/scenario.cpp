#include "pobs/scenario.hpp"

#include "pobs/error.hpp"

#include <chrono>
#include <fstream>
#include <set>

namespace pobs::cli {

using nlohmann::json;

std::string to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::HypersurfaceSection: return "hypersurface_section";
        case ScenarioKind::QuadricSection: return "quadric_section";
        case ScenarioKind::SmoothCi: return "smooth_ci";
        case ScenarioKind::Level1Scan: return "level1_scan";
        case ScenarioKind::Extendability: return "extendability";
    }
    return "smooth_ci";
}

std::filesystem::path default_scenario_dir() { return POBS_SCENARIO_DIR; }

// ---------------------------------------------------------------- schema

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
    throw Error("cli.schema", where + ": " + what);
}

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) schema_error(where, "expected an object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : obj.items()) {
        if (!ok.contains(key)) schema_error(where, "unexpected key '" + key + "'");
    }
}

const json& required(const json& obj, const std::string& where, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) schema_error(where, std::string("missing required key '") + key + "'");
    return *it;
}

std::int64_t as_int(const json& v, const std::string& where, std::int64_t min_value) {
    if (!v.is_number_integer()) schema_error(where, "expected an integer");
    const auto x = v.get<std::int64_t>();
    if (x < min_value) schema_error(where, "must be >= " + std::to_string(min_value));
    return x;
}

bool as_bool(const json& v, const std::string& where) {
    if (!v.is_boolean()) schema_error(where, "expected true or false");
    return v.get<bool>();
}

std::string as_string(const json& v, const std::string& where) {
    if (!v.is_string()) schema_error(where, "expected a string");
    return v.get<std::string>();
}

std::vector<int> as_degrees(const json& v, const std::string& where) {
    if (!v.is_array() || v.empty()) schema_error(where, "expected a nonempty array of integers");
    std::vector<int> out;
    for (const auto& d : v) out.push_back(static_cast<int>(as_int(d, where, 1)));
    return out;
}

void parse_ambient(const json& doc, ScenarioSpec& spec, bool need_degrees) {
    const json& ambient = required(doc, "scenario", "ambient");
    only_keys(ambient, "ambient", {"arity", "degrees"});
    spec.arity = static_cast<std::size_t>(as_int(required(ambient, "ambient", "arity"), "ambient.arity", 2));
    if (need_degrees) spec.degrees = as_degrees(required(ambient, "ambient", "degrees"), "ambient.degrees");
}

void parse_polynomials(const json& doc, ScenarioSpec& spec, std::size_t count) {
    const json& polys = required(doc, "scenario", "polynomials");
    if (!polys.is_array() || polys.size() != count) {
        schema_error("polynomials", "expected an array of " + std::to_string(count) + " string(s)");
    }
    for (const auto& p : polys) spec.polynomials.push_back(as_string(p, "polynomials[]"));
}

void parse_hypotheses(const json& doc, ScenarioSpec& spec) {
    const json& h = required(doc, "scenario", "hypotheses");
    only_keys(h, "hypotheses", {"H_nonconstant", "abelian_scheme"});
    obstruct::Hypotheses out;
    out.h_nonconstant = as_bool(required(h, "hypotheses", "H_nonconstant"), "hypotheses.H_nonconstant");
    out.abelian_scheme = as_bool(required(h, "hypotheses", "abelian_scheme"), "hypotheses.abelian_scheme");
    spec.hypotheses = out;
}

}  // namespace

ScenarioSpec parse_scenario(const json& doc) {
    if (!doc.is_object()) schema_error("scenario", "top level must be an object");
    ScenarioSpec spec;
    spec.source = doc;

    const auto version = as_int(required(doc, "scenario", "schema_version"), "schema_version", 1);
    if (version != kScenarioSchemaVersion) {
        schema_error("schema_version", "unsupported version " + std::to_string(version));
    }
    spec.name = as_string(required(doc, "scenario", "name"), "name");
    if (auto it = doc.find("format"); it != doc.end()) {
        const auto f = as_string(*it, "format");
        if (f == "json") {
            spec.format = OutputFormat::Json;
        } else if (f == "text") {
            spec.format = OutputFormat::Text;
        } else {
            schema_error("format", "expected \"text\" or \"json\"");
        }
    }

    const auto kind = as_string(required(doc, "scenario", "kind"), "kind");
    if (kind == "hypersurface_section") {
        spec.kind = ScenarioKind::HypersurfaceSection;
        only_keys(doc, "scenario", {"schema_version", "name", "kind", "format", "ambient", "polynomials",
                                    "hyperplane", "eliminate", "candidate_points", "hypotheses"});
        parse_ambient(doc, spec, true);
        if (spec.degrees.size() != 1) schema_error("ambient.degrees", "a hypersurface has exactly one degree");
        if (spec.arity < 4) schema_error("ambient.arity", "hypersurface sections need arity >= 4");
        parse_polynomials(doc, spec, 1);
        spec.hyperplane = as_string(required(doc, "scenario", "hyperplane"), "hyperplane");
        spec.eliminate = static_cast<std::size_t>(as_int(required(doc, "scenario", "eliminate"), "eliminate", 0));
        if (*spec.eliminate >= spec.arity) schema_error("eliminate", "variable index outside the ambient ring");
        if (auto it = doc.find("candidate_points"); it != doc.end()) {
            if (!it->is_array()) schema_error("candidate_points", "expected an array");
            for (const auto& point : *it) {
                if (!point.is_array() || point.size() != spec.arity) {
                    schema_error("candidate_points[]", "each point needs " + std::to_string(spec.arity) +
                                                           " rational strings");
                }
                std::vector<std::string> coords;
                for (const auto& c : point) coords.push_back(as_string(c, "candidate_points[][]"));
                spec.candidate_points.push_back(std::move(coords));
            }
        }
        parse_hypotheses(doc, spec);
    } else if (kind == "quadric_section") {
        spec.kind = ScenarioKind::QuadricSection;
        only_keys(doc, "scenario", {"schema_version", "name", "kind", "format", "ambient", "polynomials", "quadric",
                                    "section_flags", "hypotheses"});
        parse_ambient(doc, spec, true);
        if (spec.degrees.size() != 1) schema_error("ambient.degrees", "a hypersurface has exactly one degree");
        if (spec.arity < 4) schema_error("ambient.arity", "quadric sections need arity >= 4");
        parse_polynomials(doc, spec, 1);
        spec.quadric = as_string(required(doc, "scenario", "quadric"), "quadric");
        const json& flags = required(doc, "scenario", "section_flags");
        only_keys(flags, "section_flags", {"pieces_smooth", "pieces_distinct"});
        spec.section_flags.pieces_smooth =
            as_bool(required(flags, "section_flags", "pieces_smooth"), "section_flags.pieces_smooth");
        spec.section_flags.pieces_distinct =
            as_bool(required(flags, "section_flags", "pieces_distinct"), "section_flags.pieces_distinct");
        parse_hypotheses(doc, spec);
    } else if (kind == "smooth_ci") {
        spec.kind = ScenarioKind::SmoothCi;
        only_keys(doc, "scenario", {"schema_version", "name", "kind", "format", "multidegree", "hypotheses"});
        const json& md = required(doc, "scenario", "multidegree");
        only_keys(md, "multidegree", {"n", "degrees"});
        const int n = static_cast<int>(as_int(required(md, "multidegree", "n"), "multidegree.n", 1));
        auto degrees = as_degrees(required(md, "multidegree", "degrees"), "multidegree.degrees");
        try {
            spec.multidegree = hodge::Multidegree(n, std::move(degrees));
        } catch (const Error& e) {
            schema_error("multidegree", e.what());
        }
        parse_hypotheses(doc, spec);
    } else if (kind == "level1_scan") {
        spec.kind = ScenarioKind::Level1Scan;
        only_keys(doc, "scenario", {"schema_version", "name", "kind", "format", "box"});
        const json& box = required(doc, "scenario", "box");
        only_keys(box, "box", {"n_max", "d_max", "k_max"});
        spec.box.n_max = static_cast<int>(as_int(required(box, "box", "n_max"), "box.n_max", 3));
        spec.box.d_max = static_cast<int>(as_int(required(box, "box", "d_max"), "box.d_max", 2));
        spec.box.k_max = static_cast<int>(as_int(required(box, "box", "k_max"), "box.k_max", 1));
    } else if (kind == "extendability") {
        spec.kind = ScenarioKind::Extendability;
        only_keys(doc, "scenario", {"schema_version", "name", "kind", "format", "ambient", "polynomials"});
        parse_ambient(doc, spec, false);
        parse_polynomials(doc, spec, 1);
    } else {
        schema_error("kind", "unknown scenario kind '" + kind + "'");
    }

    // All polynomials must parse before any computation starts.
    try {
        for (const auto& p : spec.polynomials) poly::parse_poly(p, spec.arity);
        if (spec.hyperplane) poly::parse_poly(*spec.hyperplane, spec.arity);
        if (spec.quadric) poly::parse_poly(*spec.quadric, spec.arity);
        for (const auto& point : spec.candidate_points) {
            for (const auto& c : point) poly::parse_rational(c);
        }
    } catch (const Error& e) {
        schema_error("scenario", e.what());
    }
    return spec;
}

ScenarioSpec load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cli.io", "cannot open " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error("cli.schema", path.string() + ": invalid JSON: " + e.what());
    }
    return parse_scenario(doc);
}

// ---------------------------------------------------------------- pipeline

namespace {

json error_json(const Error& e) { return json{{"code", e.code()}, {"message", e.what()}}; }

json singularity_json(const sing::SingularityReport& r) {
    json points = json::array();
    for (const auto& p : r.points) {
        json coords = json::array();
        for (const auto& c : p.point.coordinates()) coords.push_back(c.get_str());
        json entry{{"coordinates", coords},
                   {"classification", sing::to_string(p.classification)},
                   {"singular", p.singular}};
        if (p.singular && p.classification != sing::PointClass::Unverified) entry["hessian_rank"] = p.hessian_rank;
        points.push_back(std::move(entry));
    }
    json out{{"locus_dimension", r.locus_dimension},
             {"complete", r.complete},
             {"node_count", r.node_count()},
             {"points", points}};
    out["jacobian_quotient_degree"] = r.jacobian_quotient_degree ? json(*r.jacobian_quotient_degree) : json(nullptr);
    out["degree_chart"] = r.degree_chart ? json(*r.degree_chart) : json(nullptr);
    return out;
}

json defect_json(const betti::DefectReport& d) {
    return json{{"t", d.t},
                {"node_count", d.node_count},
                {"monomial_count", d.monomial_count},
                {"imposed_rank", d.imposed_rank},
                {"defect", d.defect},
                {"b_above_middle", d.b_above_middle}};
}

json family_json(const hodge::Multidegree& md) {
    const auto level = hodge::hodge_level(md);
    return json{{"multidegree", md.to_string()},
                {"level", level.to_string()},
                {"betti", betti_json(hodge::betti_vector_smooth(md))}};
}

void attach_verdict(json& report, const BettiVector& b, const obstruct::Hypotheses& h) {
    report["betti"] = betti_json(b);
    try {
        const auto v = obstruct::verdict(b, h);
        report["verdict"] = verdict_json(v);
        report["ih_dims"] = report["verdict"]["ih_dims"];
    } catch (const Error& e) {
        report["errors"].push_back(error_json(e));
    }
}

void run_hypersurface_section(const ScenarioSpec& spec, const RunOptions& options, json& report) {
    const auto f = poly::parse_poly(spec.polynomials.front(), spec.arity);
    const int d = spec.degrees.front();
    if (!f.is_homogeneous() || f.degree() != d) {
        throw Error("cli.degree_mismatch", "ambient polynomial is not homogeneous of degree " + std::to_string(d));
    }
    const auto ambient = sing::analyze_singularities(f, {});
    report["ambient"] = json{{"polynomial", poly::to_string(f)},
                             {"dimension", spec.arity - 2},
                             {"smooth", ambient.locus_dimension == -1}};
    if (ambient.locus_dimension != -1) {
        report["errors"].push_back(error_json(Error("cli.ambient_singular", "the ambient hypersurface is singular")));
    }

    const auto hyperplane = poly::parse_poly(*spec.hyperplane, spec.arity);
    const auto section = poly::restrict_to_hyperplane(f, hyperplane, *spec.eliminate);
    const int n = static_cast<int>(spec.arity) - 3;
    report["section"] = json{{"polynomial", poly::to_string(section)},
                             {"arity", section.arity()},
                             {"dimension", n},
                             {"eliminated", *spec.eliminate},
                             {"hyperplane", poly::to_string(hyperplane)}};

    std::vector<sing::ProjectivePoint> candidates;
    for (const auto& coords : spec.candidate_points) {
        std::vector<poly::Rational> ambient_point;
        for (const auto& c : coords) ambient_point.push_back(poly::parse_rational(c));
        if (poly::evaluate(hyperplane, ambient_point) != 0) {
            throw Error("cli.candidate_off_hyperplane", "candidate point does not lie on the hyperplane");
        }
        std::vector<poly::Rational> chart_point;
        for (std::size_t i = 0; i < ambient_point.size(); ++i) {
            if (i != *spec.eliminate) chart_point.push_back(ambient_point[i]);
        }
        candidates.emplace_back(std::move(chart_point));
    }
    const auto sing_report = sing::analyze_singularities(section, candidates);
    report["singularities"] = singularity_json(sing_report);
    report["extendable"] = sing_report.locus_dimension <= 0;

    const hodge::Multidegree smooth_md(n, {d});
    report["smooth_family"] = family_json(smooth_md);
    const BettiVector smooth = hodge::betti_vector_smooth(smooth_md);

    if (sing_report.locus_dimension == -1) {
        attach_verdict(report, smooth, *spec.hypotheses);
        return;
    }
    if (sing_report.locus_dimension > 0) {
        report["errors"].push_back(error_json(
            Error("bettisng.unsupported", "section has non-isolated singularities; Betti vector not assembled")));
        return;
    }
    try {
        const int t = betti::conditions_degree(n, d);
        const auto defect = betti::defect(sing_report, t);
        if (options.matrix_csv) {
            std::vector<sing::ProjectivePoint> nodes;
            for (const auto& p : sing_report.points) nodes.push_back(p.point);
            std::ofstream out(*options.matrix_csv);
            if (!out) throw Error("cli.io", "cannot write " + options.matrix_csv->string());
            betti::evaluation_matrix(nodes, t).write_csv(out);
        }
        report["defect"] = defect_json(defect);
        attach_verdict(report, betti::betti_vector_nodal(smooth, defect, n), *spec.hypotheses);
    } catch (const Error& e) {
        report["errors"].push_back(error_json(e));
    }
}

void run_quadric_section(const ScenarioSpec& spec, json& report) {
    const auto f = poly::parse_poly(spec.polynomials.front(), spec.arity);
    const int d = spec.degrees.front();
    if (!f.is_homogeneous() || f.degree() != d) {
        throw Error("cli.degree_mismatch", "ambient polynomial is not homogeneous of degree " + std::to_string(d));
    }
    const auto ambient = sing::analyze_singularities(f, {});
    const int projective_dim = static_cast<int>(spec.arity) - 1;
    report["ambient"] = json{{"polynomial", poly::to_string(f)},
                             {"dimension", spec.arity - 2},
                             {"smooth", ambient.locus_dimension == -1},
                             {"veronese_embedding_dimension", hodge::linear_system_dim(projective_dim, 2)}};
    if (ambient.locus_dimension != -1) {
        report["errors"].push_back(error_json(Error("cli.ambient_singular", "the ambient hypersurface is singular")));
    }

    const int n = static_cast<int>(spec.arity) - 3;
    const hodge::Multidegree smooth_md(n, {2, d});
    json family = family_json(smooth_md);
    const BettiVector smooth = hodge::betti_vector_smooth(smooth_md);
    if (n % 2 == 1) family["intermediate_jacobian_dimension"] = smooth.at(n) / 2;
    report["smooth_family"] = family;

    const auto q = poly::parse_poly(*spec.quadric, spec.arity);
    const auto analysis = betti::quadric_analysis(q, spec.section_flags);
    report["quadric"] = json{{"polynomial", poly::to_string(q)},
                             {"rank", analysis.rank},
                             {"reduced", analysis.reduced},
                             {"components_of_section", betti::to_string(analysis.components)}};
    const auto components = analysis.component_count();
    if (!components) {
        report["errors"].push_back(error_json(Error(
            "bettisng.undetermined_components", "rank-2 quadric without asserted smooth, distinct pieces")));
        return;
    }
    // Lower half and the smooth pattern above the middle; only the top degree is recomputed.
    std::vector<std::int64_t> entries = smooth.raw();
    entries[static_cast<std::size_t>(2 * n)] = *components;
    attach_verdict(report, BettiVector::with_unknown_middle(n, std::move(entries)), *spec.hypotheses);
}

}  // namespace

json run(const ScenarioSpec& spec, const RunOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    json report;
    report["report_schema_version"] = kReportSchemaVersion;
    report["tool_version"] = kToolVersion;
    report["scenario"] = spec.source;
    report["kind"] = to_string(spec.kind);
    report["errors"] = json::array();

    try {
        switch (spec.kind) {
            case ScenarioKind::HypersurfaceSection:
                run_hypersurface_section(spec, options, report);
                break;
            case ScenarioKind::QuadricSection:
                run_quadric_section(spec, report);
                break;
            case ScenarioKind::SmoothCi: {
                report["smooth_family"] = family_json(*spec.multidegree);
                report["hodge"] = hodge_json(*spec.multidegree);
                attach_verdict(report, hodge::betti_vector_smooth(*spec.multidegree), *spec.hypotheses);
                break;
            }
            case ScenarioKind::Level1Scan: {
                json families = json::array();
                for (const auto& md : hodge::scan_level1(spec.box)) families.push_back(md.to_string());
                report["level1_families"] = families;
                report["box"] = json{{"n_max", spec.box.n_max}, {"d_max", spec.box.d_max}, {"k_max", spec.box.k_max}};
                report["conventions"] =
                    "certified only inside the box; odd n >= 3; curves and level-constant families excluded";
                break;
            }
            case ScenarioKind::Extendability: {
                const auto f = poly::parse_poly(spec.polynomials.front(), spec.arity);
                const auto r = sing::analyze_singularities(f, {});
                report["singularities"] = singularity_json(r);
                report["extendable"] = r.locus_dimension <= 0;
                break;
            }
        }
    } catch (const Error& e) {
        report["errors"].push_back(error_json(e));
    }

    const auto elapsed = std::chrono::steady_clock::now() - start;
    report["timing_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    return report;
}

json strip_timing(json report) {
    report.erase("timing_ms");
    return report;
}

}  // namespace pobs::cli
