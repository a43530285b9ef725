#include "pobs/scenario.hpp"

#include <iomanip>
#include <sstream>

namespace pobs::cli {

using nlohmann::json;

json betti_json(const BettiVector& b) {
    json out = json::array();
    for (int j = 0; j <= 2 * b.n(); ++j) {
        const auto v = b.maybe(j);
        out.push_back(v ? json(*v) : json(nullptr));
    }
    return out;
}

json verdict_json(const obstruct::ObstructionVerdict& v) {
    json ih = json::array();
    ih.push_back(v.ih.degree_zero ? json(*v.ih.degree_zero) : json(nullptr));
    for (std::size_t k = 1; k < v.ih.dims.size(); ++k) ih.push_back(v.ih.dims[k]);

    json witnesses = json::array();
    for (const auto& w : v.witnesses) {
        witnesses.push_back(json{{"k", w.k}, {"b_plus", w.b_plus}, {"b_minus", w.b_minus}});
    }
    return json{{"verdict", obstruct::to_string(v.verdict)},
                {"weakly_palindromic", v.weakly_palindromic},
                {"palindromic", v.palindromic},
                {"ih_dims", ih},
                {"witnesses", witnesses},
                {"hypotheses",
                 json{{"H_nonconstant", v.hypotheses.h_nonconstant}, {"abelian_scheme", v.hypotheses.abelian_scheme}}},
                {"disclaimer", obstruct::ObstructionVerdict::disclaimer()}};
}

json hodge_json(const hodge::Multidegree& md) {
    const auto diamond = hodge::hodge_diamond(md);
    json middle = json::array();
    for (const auto& h : diamond.middle()) middle.push_back(h.get_str());
    return json{{"multidegree", md.to_string()},
                {"n", md.n()},
                {"degrees", md.degrees()},
                {"middle_hodge", middle},
                {"betti", betti_json(hodge::betti_vector_smooth(md))},
                {"euler_characteristic", hodge::euler_characteristic(md).get_str()},
                {"level", hodge::hodge_level(md).to_string()}};
}

std::string hodge_text(const hodge::Multidegree& md) {
    const auto diamond = hodge::hodge_diamond(md);
    const int n = md.n();
    std::ostringstream out;
    out << md.to_string() << "  (dimension " << n << " in P^" << md.ambient_dimension() << ")\n\n";

    // Diamond rows m = 2n..0, entries h^{p,m-p}.
    std::size_t width = 1;
    for (int p = 0; p <= n; ++p) width = std::max(width, diamond.h(p, n - p).get_str().size());
    if (width % 2 == 0) ++width;  // keeps half-cell indents integral
    for (int m = 2 * n; m >= 0; --m) {
        const int lo = std::max(0, m - n);
        const int hi = std::min(m, n);
        const int count = hi - lo + 1;
        out << std::string(static_cast<std::size_t>(n + 1 - count) * ((width + 1) / 2) + 2, ' ');
        for (int p = hi; p >= lo; --p) {
            out << std::setw(static_cast<int>(width)) << diamond.h(p, m - p).get_str();
            if (p > lo) out << ' ';
        }
        out << '\n';
    }
    out << '\n';
    const auto betti = hodge::betti_vector_smooth(md);
    for (int m = 0; m <= 2 * n; ++m) out << "  b_" << std::left << std::setw(3) << m << std::right << "= " << betti.at(m) << '\n';
    out << "  level = " << hodge::hodge_level(md).to_string() << '\n';
    out << "  euler = " << hodge::euler_characteristic(md).get_str() << '\n';
    return out.str();
}

namespace {

std::string betti_text(const json& b) {
    std::string s = "(";
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i > 0) s += ',';
        s += b[i].is_null() ? "?" : b[i].dump();
    }
    return s + ")";
}

void line(std::ostringstream& out, const std::string& key, const std::string& value) {
    out << "  " << std::left << std::setw(26) << key << value << '\n';
}

}  // namespace

std::string render_text(const json& r) {
    std::ostringstream out;
    out << "scenario " << r["scenario"].value("name", "?") << " [" << r.value("kind", "?") << "]\n";
    if (r.contains("ambient")) {
        const auto& a = r["ambient"];
        line(out, "ambient", a["polynomial"].get<std::string>());
        line(out, "ambient smooth", a["smooth"].get<bool>() ? "yes" : "no");
        if (a.contains("veronese_embedding_dimension")) {
            line(out, "|O(2)| dimension", a["veronese_embedding_dimension"].dump());
        }
    }
    if (r.contains("section")) {
        line(out, "section", r["section"]["polynomial"].get<std::string>());
    }
    if (r.contains("singularities")) {
        const auto& s = r["singularities"];
        line(out, "singular locus dimension", s["locus_dimension"].dump());
        if (!s["jacobian_quotient_degree"].is_null()) line(out, "jacobian scheme degree", s["jacobian_quotient_degree"].dump());
        line(out, "verified nodes", s["node_count"].dump());
        line(out, "certificate complete", s["complete"].get<bool>() ? "yes" : "no");
    }
    if (r.contains("extendable")) {
        line(out, "extendable", r["extendable"].get<bool>() ? "yes (isolated singularities)" : "no (non-isolated singularities)");
    }
    if (r.contains("smooth_family")) {
        const auto& f = r["smooth_family"];
        line(out, "smooth family", f["multidegree"].get<std::string>() + ", level " + f["level"].get<std::string>());
        line(out, "smooth betti", betti_text(f["betti"]));
        if (f.contains("intermediate_jacobian_dimension")) {
            line(out, "intermediate jacobian dim", f["intermediate_jacobian_dimension"].dump());
        }
    }
    if (r.contains("quadric")) {
        const auto& q = r["quadric"];
        line(out, "quadric rank", q["rank"].dump());
        line(out, "section components", q["components_of_section"].get<std::string>());
    }
    if (r.contains("defect")) {
        const auto& d = r["defect"];
        line(out, "defect", "t=" + d["t"].dump() + " rank=" + d["imposed_rank"].dump() + "/" + d["node_count"].dump() +
                                " delta=" + d["defect"].dump());
    }
    if (r.contains("level1_families")) {
        std::string list;
        for (const auto& f : r["level1_families"]) list += (list.empty() ? "" : " ") + f.get<std::string>();
        line(out, "level-1 families", list.empty() ? "(none)" : list);
        line(out, "box", "n<=" + r["box"]["n_max"].dump() + " d<=" + r["box"]["d_max"].dump() +
                             " k<=" + r["box"]["k_max"].dump());
    }
    if (r.contains("betti")) line(out, "betti", betti_text(r["betti"]));
    if (r.contains("verdict")) {
        const auto& v = r["verdict"];
        line(out, "ih dims", betti_text(v["ih_dims"]));
        line(out, "weakly palindromic", v["weakly_palindromic"].get<bool>() ? "yes" : "no");
        line(out, "palindromic", v["palindromic"].get<bool>() ? "yes" : "no");
        line(out, "verdict", v["verdict"].get<std::string>());
        out << "  note: " << v["disclaimer"].get<std::string>() << '\n';
    }
    for (const auto& e : r["errors"]) out << "  error " << e["code"].get<std::string>() << ": " << e["message"].get<std::string>() << '\n';
    return out.str();
}

}  // namespace pobs::cli
