#ifndef POBS_SINGULAR_HPP
#define POBS_SINGULAR_HPP

#include "pobs/idealcalc.hpp"
#include "pobs/polyring.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pobs::sing {

using poly::MultiPoly;
using poly::Rational;

// Point of projective space, normalized so the first nonzero coordinate is 1.
class ProjectivePoint {
public:
    explicit ProjectivePoint(std::vector<Rational> coordinates);

    std::size_t size() const noexcept { return coords_.size(); }
    const std::vector<Rational>& coordinates() const noexcept { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    // Index of the first nonzero coordinate (the normalizing chart).
    std::size_t chart() const;

    std::string to_string() const;

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
    friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b);

private:
    std::vector<Rational> coords_;
};

enum class PointClass { Node, NonNodeIsolated, Unverified };

std::string to_string(PointClass c);

struct ClassifiedPoint {
    ProjectivePoint point;
    PointClass classification;
    // Exact rank of the chart Hessian (only meaningful for singular points).
    std::size_t hessian_rank = 0;
    // False when some partial derivative is nonzero at the point.
    bool singular = false;
};

struct SingularityReport {
    int locus_dimension = -1;
    std::optional<std::size_t> jacobian_quotient_degree;
    // The linear form whose complement chart carried the degree computation.
    std::optional<std::string> degree_chart;
    std::vector<ClassifiedPoint> points;
    bool complete = false;

    std::size_t node_count() const;
    bool all_nodes() const;
};

std::vector<MultiPoly> jacobian_ideal(const MultiPoly& f);

SingularityReport analyze_singularities(const MultiPoly& f,
                                        std::span<const ProjectivePoint> candidates);

// True iff V(f) has at most isolated singularities, i.e. V(f) is a hyperplane
// section of some smooth hypersurface of the same degree one dimension up.
bool extendability(const MultiPoly& f);

// Degree of the zero-dimensional scheme cut out by a homogeneous ideal. Found
// by locating a linear form missing the scheme and counting standard monomials
// in the complementary affine chart.
struct SchemeDegree {
    std::size_t degree;
    MultiPoly chart_form;
};
SchemeDegree zero_dimensional_degree(const std::vector<MultiPoly>& homogeneous_gens);

}  // namespace pobs::sing

#endif  // POBS_SINGULAR_HPP
