#include "pobs/singular.hpp"

#include "pobs/error.hpp"
#include "pobs/exact_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace pobs::sing {

using ideal::buchberger;
using ideal::GroebnerBasis;
using poly::Monomial;

ProjectivePoint::ProjectivePoint(std::vector<Rational> coordinates) : coords_(std::move(coordinates)) {
    auto first = std::find_if(coords_.begin(), coords_.end(), [](const Rational& c) { return c != 0; });
    if (first == coords_.end()) throw Error("singular.zero_point", "projective point with all coordinates zero");
    const Rational scale = *first;
    for (auto& c : coords_) c /= scale;
}

std::size_t ProjectivePoint::chart() const {
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] != 0) return i;
    }
    return coords_.size();
}

std::string ProjectivePoint::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i > 0) out << ':';
        out << coords_[i].get_str();
    }
    out << ')';
    return out.str();
}

bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
    return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                        b.coords_.end());
}

std::string to_string(PointClass c) {
    switch (c) {
        case PointClass::Node: return "node";
        case PointClass::NonNodeIsolated: return "non-node-isolated";
        case PointClass::Unverified: return "unverified";
    }
    return "unverified";
}

std::size_t SingularityReport::node_count() const {
    return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [](const auto& p) {
        return p.classification == PointClass::Node;
    }));
}

bool SingularityReport::all_nodes() const {
    return std::all_of(points.begin(), points.end(),
                       [](const auto& p) { return p.classification == PointClass::Node; });
}

std::vector<MultiPoly> jacobian_ideal(const MultiPoly& f) {
    if (f.is_zero()) throw Error("singular.zero", "zero polynomial");
    if (!f.is_homogeneous()) throw Error("singular.not_homogeneous", "polynomial is not homogeneous");
    std::vector<MultiPoly> partials;
    partials.reserve(f.arity());
    for (std::size_t i = 0; i < f.arity(); ++i) partials.push_back(poly::partial_derivative(f, i));
    return partials;
}

namespace {

// Candidate linear forms: coordinate hyperplanes first, then x0 + c*x1 + c^2*x2 + ...
std::vector<MultiPoly> chart_forms(std::size_t arity) {
    std::vector<MultiPoly> forms;
    for (std::size_t i = 0; i < arity; ++i) forms.push_back(MultiPoly::variable(arity, i));
    for (long c = 1; c <= 16; ++c) {
        MultiPoly form(arity);
        Rational power = 1;
        for (std::size_t i = 0; i < arity; ++i) {
            form.add_term(Monomial::variable(arity, i), power);
            power *= c;
        }
        forms.push_back(std::move(form));
    }
    return forms;
}

// Affine chart {form = 1}: solve for the first variable with nonzero coefficient.
std::vector<MultiPoly> affine_chart(const std::vector<MultiPoly>& gens, const MultiPoly& form) {
    const std::size_t arity = form.arity();
    std::size_t pivot_index = arity;
    Rational pivot = 0;
    for (std::size_t i = 0; i < arity; ++i) {
        pivot = form.coefficient(Monomial::variable(arity, i));
        if (pivot != 0) {
            pivot_index = i;
            break;
        }
    }
    const std::size_t target = arity - 1;
    MultiPoly solved = MultiPoly::constant(target, Rational(1) / pivot);
    for (std::size_t i = 0, j = 0; i < arity; ++i) {
        if (i == pivot_index) continue;
        solved.add_term(Monomial::variable(target, j++),
                        -form.coefficient(Monomial::variable(arity, i)) / pivot);
    }
    std::vector<MultiPoly> replacements;
    for (std::size_t i = 0, j = 0; i < arity; ++i) {
        replacements.push_back(i == pivot_index ? solved : MultiPoly::variable(target, j++));
    }
    std::vector<MultiPoly> out;
    for (const auto& g : gens) out.push_back(poly::substitute(g, replacements, target));
    return out;
}

std::size_t hessian_rank_at(const MultiPoly& f, const ProjectivePoint& p) {
    const std::size_t chart = p.chart();
    const MultiPoly affine = poly::dehomogenize(f, chart);
    std::vector<Rational> point;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i != chart) point.push_back(p[i]);
    }
    const std::size_t n = affine.arity();
    poly::RationalMatrix hessian(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const MultiPoly di = poly::partial_derivative(affine, i);
        for (std::size_t j = i; j < n; ++j) {
            const Rational v = poly::evaluate(poly::partial_derivative(di, j), point);
            hessian(i, j) = v;
            hessian(j, i) = v;
        }
    }
    return poly::rank(hessian);
}

}  // namespace

SchemeDegree zero_dimensional_degree(const std::vector<MultiPoly>& homogeneous_gens) {
    if (homogeneous_gens.empty()) throw Error("singular.empty", "no generators");
    const std::size_t arity = homogeneous_gens.front().arity();
    if (arity < 2) throw Error("singular.arity", "projective space needs at least two coordinates");
    if (ideal::projective_dimension(buchberger(homogeneous_gens)) > 0) {
        throw Error("singular.not_zero_dimensional", "scheme is not zero-dimensional");
    }
    for (const auto& form : chart_forms(arity)) {
        std::vector<MultiPoly> with_form = homogeneous_gens;
        with_form.push_back(form);
        if (ideal::projective_dimension(buchberger(with_form)) != -1) continue;

        const GroebnerBasis chart_gb = buchberger(affine_chart(homogeneous_gens, form));
        if (chart_gb.is_unit_ideal()) return {0, form};
        if (!ideal::is_artinian(chart_gb)) {
            throw Error("singular.not_zero_dimensional", "scheme is not zero-dimensional");
        }
        return {ideal::quotient_dimension(chart_gb), form};
    }
    throw Error("singular.no_chart", "no tried linear form avoids the scheme");
}

SingularityReport analyze_singularities(const MultiPoly& f,
                                        std::span<const ProjectivePoint> candidates) {
    std::vector<MultiPoly> gens = jacobian_ideal(f);
    const std::vector<MultiPoly> partials = gens;
    gens.push_back(f);

    SingularityReport report;
    report.locus_dimension = ideal::projective_dimension(buchberger(gens));

    if (report.locus_dimension == -1) {
        report.jacobian_quotient_degree = 0;
    } else if (report.locus_dimension == 0) {
        const SchemeDegree deg = zero_dimensional_degree(gens);
        report.jacobian_quotient_degree = deg.degree;
        report.degree_chart = poly::to_string(deg.chart_form);
    }

    std::vector<ProjectivePoint> unique(candidates.begin(), candidates.end());
    std::sort(unique.begin(), unique.end());
    unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

    for (const auto& p : unique) {
        if (p.size() != f.arity()) {
            throw Error("singular.point_length", "candidate " + p.to_string() + " has wrong length");
        }
        if (poly::evaluate(f, p.coordinates()) != 0) {
            throw Error("singular.not_on_hypersurface", "candidate " + p.to_string() + " is not on V(f)");
        }
        ClassifiedPoint cp{p, PointClass::Unverified};
        cp.singular = std::all_of(partials.begin(), partials.end(), [&](const MultiPoly& d) {
            return poly::evaluate(d, p.coordinates()) == 0;
        });
        if (cp.singular && report.locus_dimension <= 0) {
            cp.hessian_rank = hessian_rank_at(f, p);
            cp.classification =
                cp.hessian_rank == f.arity() - 1 ? PointClass::Node : PointClass::NonNodeIsolated;
        }
        report.points.push_back(std::move(cp));
    }

    if (report.jacobian_quotient_degree) {
        const bool every_singular_is_node = std::all_of(
            report.points.begin(), report.points.end(), [](const ClassifiedPoint& p) {
                return !p.singular || p.classification == PointClass::Node;
            });
        report.complete = every_singular_is_node && report.node_count() == *report.jacobian_quotient_degree;
    }
    return report;
}

bool extendability(const MultiPoly& f) { return analyze_singularities(f, {}).locus_dimension <= 0; }

}  // namespace pobs::sing
