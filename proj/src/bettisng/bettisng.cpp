#include "pobs/bettisng.hpp"

#include "pobs/error.hpp"

#include <algorithm>
#include <functional>

namespace pobs::betti {

using poly::Monomial;
using poly::Rational;

int conditions_degree(int n, int d) {
    if (n < 1 || n % 2 == 0) throw Error("bettisng.even_dimension", "defect needs odd dimension n");
    return ((n + 1) / 2) * d - n - 2;
}

namespace {

std::vector<Monomial> monomials_of_degree(std::size_t arity, unsigned degree) {
    std::vector<Monomial> out;
    Monomial current(arity);
    std::function<void(std::size_t, unsigned)> fill = [&](std::size_t var, unsigned left) {
        if (var + 1 == arity) {
            current[var] = left;
            out.push_back(current);
            return;
        }
        for (unsigned e = left + 1; e-- > 0;) {
            current[var] = e;
            fill(var + 1, left - e);
        }
    };
    fill(0, degree);
    return out;
}

}  // namespace

poly::RationalMatrix evaluation_matrix(std::span<const ProjectivePoint> nodes, int t) {
    if (t < 0) throw Error("bettisng.unsupported", "negative conditions degree " + std::to_string(t));
    if (nodes.empty()) return poly::RationalMatrix(0, 0);
    const std::size_t arity = nodes.front().size();
    const auto monomials = monomials_of_degree(arity, static_cast<unsigned>(t));
    poly::RationalMatrix m(nodes.size(), monomials.size());
    for (std::size_t r = 0; r < nodes.size(); ++r) {
        if (nodes[r].size() != arity) throw Error("bettisng.point_length", "nodes differ in length");
        for (std::size_t c = 0; c < monomials.size(); ++c) {
            m(r, c) = poly::evaluate(MultiPoly::monomial(monomials[c]), nodes[r].coordinates());
        }
    }
    return m;
}

DefectReport defect(std::span<const ProjectivePoint> nodes, int t) {
    const poly::RationalMatrix m = evaluation_matrix(nodes, t);
    DefectReport report;
    report.t = t;
    report.node_count = nodes.size();
    report.monomial_count = m.cols();
    report.imposed_rank = poly::rank(m);
    report.defect = report.node_count - report.imposed_rank;
    report.b_above_middle = 1 + static_cast<std::int64_t>(report.defect);
    return report;
}

DefectReport defect(const sing::SingularityReport& certificate, int t) {
    if (!certificate.complete || !certificate.all_nodes()) {
        throw Error("bettisng.unverified_nodes",
                    "defect requires a complete certificate in which every singular point is a node");
    }
    std::vector<ProjectivePoint> nodes;
    for (const auto& p : certificate.points) nodes.push_back(p.point);
    return defect(nodes, t);
}

BettiVector betti_vector_nodal(const BettiVector& smooth, const std::optional<DefectReport>& report,
                               int n) {
    if (n % 2 == 0) throw Error("bettisng.even_dimension", "nodal Betti assembly needs odd n");
    if (smooth.n() != n) throw Error("bettisng.dimension_mismatch", "smooth vector has another dimension");
    if (!report) return smooth;
    std::vector<std::int64_t> entries = smooth.raw();
    entries[static_cast<std::size_t>(n + 1)] = report->b_above_middle;
    return BettiVector::with_unknown_middle(n, std::move(entries));
}

std::string to_string(SectionComponents c) {
    switch (c) {
        case SectionComponents::Irreducible: return "irreducible";
        case SectionComponents::Two: return "2";
        case SectionComponents::NonReduced: return "non-reduced";
        case SectionComponents::Undetermined: return "undetermined";
    }
    return "undetermined";
}

std::optional<int> QuadricAnalysis::component_count() const {
    switch (components) {
        case SectionComponents::Irreducible: return 1;
        case SectionComponents::Two: return 2;
        case SectionComponents::NonReduced: return 1;
        case SectionComponents::Undetermined: return std::nullopt;
    }
    return std::nullopt;
}

poly::RationalMatrix gram_matrix(const MultiPoly& q) {
    if (q.is_zero() || q.degree() != 2 || !q.is_homogeneous()) {
        throw Error("bettisng.not_quadratic", "expected a nonzero homogeneous quadratic form");
    }
    const std::size_t n = q.arity();
    poly::RationalMatrix g(n, n);
    for (const auto& [m, c] : q.terms()) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::uint32_t e = 0; e < m[i]; ++e) idx.push_back(i);
        }
        if (idx[0] == idx[1]) {
            g(idx[0], idx[0]) = c;
        } else {
            g(idx[0], idx[1]) = c / 2;
            g(idx[1], idx[0]) = c / 2;
        }
    }
    return g;
}

QuadricAnalysis quadric_analysis(const MultiPoly& q, const SectionFlags& flags) {
    QuadricAnalysis out;
    out.rank = poly::rank(gram_matrix(q));
    out.reduced = out.rank >= 2;
    if (out.rank >= 3) {
        out.components = SectionComponents::Irreducible;
    } else if (out.rank == 2) {
        out.components = (flags.pieces_smooth && flags.pieces_distinct) ? SectionComponents::Two
                                                                        : SectionComponents::Undetermined;
    } else {
        out.components = SectionComponents::NonReduced;
    }
    return out;
}

}  // namespace pobs::betti
