#include "oracles.hpp"

#include "pobs/error.hpp"
#include "pobs/exact_matrix.hpp"
#include "pobs/singular.hpp"

#include <doctest.h>

using namespace pobs::sing;
using pobs::poly::parse_poly;

namespace {

MultiPoly P(const char* text, std::size_t arity) { return parse_poly(text, arity); }

ProjectivePoint pt(std::initializer_list<long> coords) {
    std::vector<Rational> c;
    for (long v : coords) c.emplace_back(v);
    return ProjectivePoint(c);
}

std::string error_code(auto&& fn) {
    try {
        fn();
    } catch (const pobs::Error& e) {
        return e.code();
    }
    return "";
}

}  // namespace

TEST_CASE("ProjectivePoint normalizes by the first nonzero coordinate") {
    const auto p = pt({0, -2, 4});
    CHECK(p.chart() == 1);
    CHECK(p[1] == 1);
    CHECK(p[2] == -2);
    CHECK(p == pt({0, 1, -2}));
    CHECK(p.to_string() == "(0:1:-2)");
    CHECK(error_code([] { pt({0, 0}); }) == "singular.zero_point");
}

TEST_CASE("jacobian_ideal: reference examples") {
    const auto jac = jacobian_ideal(P("x0^3+x1^3+x2^3+x3^3+x4^3", 5));
    REQUIRE(jac.size() == 5);
    CHECK(jac[2] == P("3*x2^2", 5));

    const auto segre_jac = jacobian_ideal(P(pobs::testing::kSegreFrozen, 5));
    CHECK(segre_jac.size() == 5);
    for (const auto& g : segre_jac) CHECK((g.degree() == 2 && g.is_homogeneous()));

    const auto lin = jacobian_ideal(P("x0 + 2*x1", 2));
    CHECK(lin[0] == P("1", 2));
    CHECK(lin[1] == P("2", 2));

    CHECK(error_code([] { jacobian_ideal(MultiPoly(3)); }) == "singular.zero");
    CHECK(error_code([] { jacobian_ideal(P("x0^2 + x1", 2)); }) == "singular.not_homogeneous");
}

TEST_CASE("analyze: Segre cubic with its ten nodes") {
    const auto f = P(pobs::testing::kSegreFrozen, 5);
    const auto nodes = pobs::testing::segre_nodes();
    const auto report = analyze_singularities(f, nodes);

    CHECK(report.locus_dimension == 0);
    REQUIRE(report.jacobian_quotient_degree.has_value());
    CHECK(*report.jacobian_quotient_degree == 10);
    CHECK(report.points.size() == 10);
    CHECK(report.node_count() == 10);
    CHECK(report.all_nodes());
    CHECK(report.complete);
    for (const auto& p : report.points) {
        CHECK(p.singular);
        CHECK(p.hessian_rank == 4);
        for (std::size_t i = 0; i < 5; ++i) CHECK(evaluate(partial_derivative(f, i), p.point.coordinates()) == 0);
    }
    // report order is by normalized coordinates
    CHECK(std::is_sorted(report.points.begin(), report.points.end(),
                         [](const auto& a, const auto& b) { return a.point < b.point; }));
}

TEST_CASE("analyze: missing nodes leave the certificate incomplete") {
    const auto f = P(pobs::testing::kSegreFrozen, 5);
    auto nodes = pobs::testing::segre_nodes();
    nodes.pop_back();
    const auto report = analyze_singularities(f, nodes);
    CHECK(report.node_count() == 9);
    CHECK_FALSE(report.complete);

    // duplicates are collapsed, not double counted
    auto doubled = pobs::testing::segre_nodes();
    doubled.push_back(doubled.front());
    CHECK(analyze_singularities(f, doubled).node_count() == 10);
}

TEST_CASE("analyze: Fermat cubic is smooth, cone is singular along a line") {
    const auto fermat = analyze_singularities(P("x0^3+x1^3+x2^3+x3^3+x4^3", 5), {});
    CHECK(fermat.locus_dimension == -1);
    CHECK(fermat.points.empty());

    const auto cone = analyze_singularities(P("x0^3+x1^3+x2^3", 5), {});
    CHECK(cone.locus_dimension == 1);
    CHECK_FALSE(cone.complete);
    CHECK_FALSE(cone.jacobian_quotient_degree.has_value());
}

TEST_CASE("analyze: node versus cusp on plane cubics") {
    // nodal cubic, node at (1:0:0)
    const auto nodal = analyze_singularities(P("x0*x2^2 - x1^3 - x0*x1^2", 3), std::vector{pt({1, 0, 0})});
    REQUIRE(nodal.points.size() == 1);
    CHECK(nodal.points[0].classification == PointClass::Node);
    CHECK(nodal.jacobian_quotient_degree == std::optional<std::size_t>(1));
    CHECK(nodal.complete);

    // cuspidal cubic: Hessian rank drops to 1; the Tjurina number is 2
    const auto cusp = analyze_singularities(P("x0*x2^2 - x1^3", 3), std::vector{pt({1, 0, 0})});
    REQUIRE(cusp.points.size() == 1);
    CHECK(cusp.points[0].classification == PointClass::NonNodeIsolated);
    CHECK(cusp.points[0].hessian_rank == 1);
    CHECK(cusp.jacobian_quotient_degree == std::optional<std::size_t>(2));
    CHECK_FALSE(cusp.complete);
}

TEST_CASE("analyze: node at infinity of the first charts") {
    // node at (0:0:1); the degree chart must avoid it
    const auto f = P("x2*x0^2 - x1^3 - x2*x1^2", 3);
    const auto report = analyze_singularities(f, std::vector{pt({0, 0, 1})});
    CHECK(report.node_count() == 1);
    CHECK(report.jacobian_quotient_degree == std::optional<std::size_t>(1));
    CHECK(report.complete);
}

TEST_CASE("analyze: candidate errors and non-singular flags") {
    const auto f = P("x0*x2^2 - x1^3 - x0*x1^2", 3);
    CHECK(error_code([&] { analyze_singularities(f, std::vector{pt({1, 1, 1})}); }) == "singular.not_on_hypersurface");
    CHECK(error_code([&] { analyze_singularities(f, std::vector{pt({1, 0})}); }) == "singular.point_length");

    // (1:-1:0) lies on the curve but is a smooth point
    const auto report = analyze_singularities(f, std::vector{pt({1, -1, 0}), pt({1, 0, 0})});
    REQUIRE(report.points.size() == 2);
    const auto smooth = std::find_if(report.points.begin(), report.points.end(),
                                     [](const auto& p) { return !p.singular; });
    REQUIRE(smooth != report.points.end());
    CHECK(smooth->classification == PointClass::Unverified);
    CHECK(report.node_count() == 1);
}

TEST_CASE("extendability: examples and the locus-dimension rule") {
    CHECK(extendability(P(pobs::testing::kSegreFrozen, 5)));
    CHECK_FALSE(extendability(P("x0^3+x1^3+x2^3", 5)));
    CHECK(extendability(P("x0^3+x1^3+x2^3+x3^3+x4^3", 5)));
    for (const char* text : {"x0*x1 - x2^2", "x0^2*x1 + x2^3", "x0*x1*x2", "x0^2"}) {
        const auto f = P(text, 3);
        CHECK(extendability(f) == (analyze_singularities(f, {}).locus_dimension <= 0));
    }
}

TEST_CASE("zero_dimensional_degree: points in general and special position") {
    // Two reduced points (1:0:0), (0:1:0) and a double point structure at (0:0:1).
    const auto two = zero_dimensional_degree({P("x2", 3), P("x0*x1", 3)});
    CHECK(two.degree == 2);
    const auto fat = zero_dimensional_degree({P("x0^2", 3), P("x1", 3)});
    CHECK(fat.degree == 2);
    CHECK(error_code([] { zero_dimensional_degree({P("x0", 3)}); }) == "singular.not_zero_dimensional");
}
