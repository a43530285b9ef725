#ifndef POBS_BETTISNG_HPP
#define POBS_BETTISNG_HPP

#include "pobs/betti_vector.hpp"
#include "pobs/exact_matrix.hpp"
#include "pobs/singular.hpp"

#include <optional>
#include <span>
#include <string>

namespace pobs::betti {

using poly::MultiPoly;
using sing::ProjectivePoint;

struct DefectReport {
    int t = 0;
    std::size_t node_count = 0;
    std::size_t monomial_count = 0;
    std::size_t imposed_rank = 0;
    std::size_t defect = 0;
    std::int64_t b_above_middle = 1;
};

// Degree of the forms whose conditions at the nodes measure the defect of a
// nodal hypersurface of odd dimension n and degree d: ((n+1)/2)*d - n - 2.
int conditions_degree(int n, int d);

// Rows: nodes; columns: degree-t monomials in descending lex order.
poly::RationalMatrix evaluation_matrix(std::span<const ProjectivePoint> nodes, int t);

// Defect of the node set with respect to forms of degree t.
DefectReport defect(std::span<const ProjectivePoint> nodes, int t);

// Same, but insists on a complete all-node certificate from the singularity analysis.
DefectReport defect(const sing::SingularityReport& certificate, int t);

// b_{n+1} = 1 + defect; b_n unknown; other entries follow the smooth member.
BettiVector betti_vector_nodal(const BettiVector& smooth, const std::optional<DefectReport>& report,
                               int n);

enum class SectionComponents { Irreducible, Two, NonReduced, Undetermined };

std::string to_string(SectionComponents c);

// User assertions mirroring the genericity hypotheses on the two hyperplane pieces.
struct SectionFlags {
    bool pieces_smooth = false;
    bool pieces_distinct = false;
};

struct QuadricAnalysis {
    std::size_t rank = 0;
    bool reduced = false;
    SectionComponents components = SectionComponents::Undetermined;

    // Number of irreducible components of the section, i.e. b_{2n}; empty if undetermined.
    std::optional<int> component_count() const;
};

// Symmetric Gram matrix: G_ii = coeff(x_i^2), G_ij = coeff(x_i x_j) / 2.
poly::RationalMatrix gram_matrix(const MultiPoly& q);

QuadricAnalysis quadric_analysis(const MultiPoly& q, const SectionFlags& flags);

}  // namespace pobs::betti

#endif  // POBS_BETTISNG_HPP
