#include "oracles.hpp"

#include "pobs/error.hpp"
#include "pobs/exact_matrix.hpp"
#include "pobs/polyring.hpp"

#include <doctest.h>

#include <random>

using namespace pobs::poly;
using pobs::testing::exponent_vectors;
using pobs::testing::random_homogeneous;
using pobs::testing::random_poly;
using pobs::testing::random_rational;

namespace {

std::string error_code(auto&& fn) {
    try {
        fn();
    } catch (const pobs::Error& e) {
        return e.code();
    }
    return "";
}

MultiPoly P(const char* text, std::size_t arity) { return parse_poly(text, arity); }

}  // namespace

TEST_CASE("parse: reference examples") {
    const auto cubic = P("x0^3 + x1^3", 2);
    CHECK(cubic.term_count() == 2);
    CHECK(cubic.coefficient(Monomial({3, 0})) == 1);
    CHECK(cubic.coefficient(Monomial({0, 3})) == 1);

    CHECK(P("0", 3).is_zero());
    CHECK(P("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", 6).term_count() == 6);
}

TEST_CASE("parse: coefficients, juxtaposition, whitespace, aliases") {
    const auto p = P("  - 2/4 x0 x1^2 + 3*x2 - x0*x1^2 ", 3);
    CHECK(p.coefficient(Monomial({1, 2, 0})) == make_rational(-3, 2));
    CHECK(p.coefficient(Monomial({0, 0, 1})) == 3);
    CHECK(P("x0 - x0", 1).is_zero());
    CHECK(P("x1*x1", 2) == P("x1^2", 2));

    const AliasTable aliases{{"x", 0}, {"y", 1}};
    CHECK(parse_poly("x^2 - y", 2, aliases) == P("x0^2 - x1", 2));
}

TEST_CASE("parse: errors") {
    CHECK(error_code([] { P("x0 +", 2); }) == "polyring.parse");
    CHECK(error_code([] { P("x2", 2); }) == "polyring.parse");  // index >= arity
    CHECK(error_code([] { P("x0/x1", 2); }) == "polyring.parse");
    CHECK(error_code([] { P("(x0+x1)^2", 2); }) == "polyring.parse");
    CHECK(error_code([] { P("", 2); }) == "polyring.parse");
    CHECK(error_code([] { P("3/0 x0", 2); }) == "polyring.parse");
    CHECK(error_code([] { P("y", 2); }) == "polyring.parse");

    try {
        P("x0 + * x1", 2);
        FAIL("expected a parse error");
    } catch (const pobs::Error& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("arith: reference examples") {
    CHECK(partial_derivative(P("x0^2*x1", 2), 0) == P("2*x0*x1", 2));
    CHECK(mul(P("x0+x1", 2), P("x0-x1", 2)) == P("x0^2-x1^2", 2));
    CHECK(partial_derivative(P("x0^3+x1^3", 3), 2).is_zero());
    CHECK(scalar_mul(make_rational(1, 2), P("4*x0", 1)) == P("2*x0", 1));
    CHECK(error_code([] { add(MultiPoly(2), MultiPoly(3)); }) == "polyring.arity_mismatch");
}

TEST_CASE("restrict: Segre cubic against two independent expansions") {
    const auto fermat = P("x0^3+x1^3+x2^3+x3^3+x4^3+x5^3", 6);
    const auto h = P("x0+x1+x2+x3+x4+x5", 6);
    const auto segre = restrict_to_hyperplane(fermat, h, 5);

    CHECK(segre.arity() == 5);
    CHECK(segre.is_homogeneous());
    CHECK(segre.degree() == 3);
    CHECK(segre.term_count() == 30);
    CHECK(segre == pobs::testing::segre_by_multinomial());
    CHECK(segre == P(pobs::testing::kSegreFrozen, 5));
}

TEST_CASE("restrict: small examples and errors") {
    CHECK(restrict_to_hyperplane(P("x0^2", 2), P("x1", 2), 1) == P("x0^2", 1));
    // x5 = -x0, remaining variables x0..x4
    CHECK(restrict_to_hyperplane(P("x0*x5", 6), P("x0+x5", 6), 5) == P("-x0^2", 5));
    // eliminating a middle variable renumbers the rest
    CHECK(restrict_to_hyperplane(P("x1*x2", 3), P("x1-2*x0", 3), 1) == P("2*x0*x1", 2));

    CHECK(error_code([] { restrict_to_hyperplane(P("x0", 2), P("x0", 2), 1); }) == "polyring.zero_pivot");
    CHECK(error_code([] { restrict_to_hyperplane(P("x0", 2), P("x0^2+x1", 2), 1); }) ==
          "polyring.nonlinear_hyperplane");
    CHECK(error_code([] { restrict_to_hyperplane(P("x0", 2), P("x1+1", 2), 1); }) ==
          "polyring.nonlinear_hyperplane");
}

TEST_CASE("evaluate: reference examples") {
    const std::vector<Rational> pt{3, 4};
    CHECK(evaluate(P("x0^2+x1^2", 2), pt) == 25);

    const auto segre = P(pobs::testing::kSegreFrozen, 5);
    const std::vector<Rational> node{1, 1, 1, -1, -1};
    CHECK(evaluate(segre, node) == 0);
    for (std::size_t i = 0; i < 5; ++i) CHECK(evaluate(partial_derivative(segre, i), node) == 0);

    const std::vector<Rational> origin(3, Rational(0));
    CHECK(evaluate(P("7/3 + x0*x2 - x1", 3), origin) == make_rational(7, 3));
    CHECK(error_code([] {
              const std::vector<Rational> bad{1};
              evaluate(P("x0+x1", 2), bad);
          }) == "polyring.point_length");
}

TEST_CASE("print: canonical ordering") {
    CHECK(to_string(P("x1 + x0^2 - 1 + x0*x1", 2)) == "x0^2 + x0*x1 + x1 - 1");
    CHECK(to_string(P("0", 2)) == "0");
    CHECK(to_string(P("-1/2*x1", 2)) == "-1/2*x1");
}

TEST_CASE("property: ring laws on random polynomials") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = random_poly(rng, 3, 3, 4);
        const auto b = random_poly(rng, 3, 3, 4);
        const auto c = random_poly(rng, 3, 2, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        // Leibniz
        CHECK(partial_derivative(a * b, 1) == partial_derivative(a, 1) * b + a * partial_derivative(b, 1));
    }
}

TEST_CASE("property: Euler identity for homogeneous polynomials") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned d = 1 + trial % 4;
        const auto p = random_homogeneous(rng, 4, d, 5);
        MultiPoly lhs(4);
        for (std::size_t i = 0; i < 4; ++i) lhs += MultiPoly::variable(4, i) * partial_derivative(p, i);
        CHECK(lhs == Rational(d) * p);
    }
}

TEST_CASE("property: restriction commutes with evaluation") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = random_homogeneous(rng, 4, 3, 6);
        MultiPoly h(4);
        for (std::size_t i = 0; i < 4; ++i) h.add_term(Monomial::variable(4, i), random_rational(rng));
        const std::size_t elim = trial % 4;
        if (h.coefficient(Monomial::variable(4, elim)) == 0) h.add_term(Monomial::variable(4, elim), 1);
        if (h.coefficient(Monomial::variable(4, elim)) == 0) continue;
        const auto r = restrict_to_hyperplane(p, h, elim);

        std::vector<Rational> y(3);
        for (auto& v : y) v = random_rational(rng);
        // Lift y to the hyperplane by solving for x_elim.
        std::vector<Rational> x(4);
        Rational rest = 0;
        for (std::size_t i = 0, j = 0; i < 4; ++i) {
            if (i == elim) continue;
            x[i] = y[j++];
            rest += h.coefficient(Monomial::variable(4, i)) * x[i];
        }
        x[elim] = -rest / h.coefficient(Monomial::variable(4, elim));
        CHECK(evaluate(h, x) == 0);
        CHECK(evaluate(r, y) == evaluate(p, x));
    }
}

TEST_CASE("property: print/parse round trip") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = random_poly(rng, 4, 4, 6);
        const auto text = to_string(p);
        const auto q = parse_poly(text, 4);
        CHECK(q == p);
        CHECK(to_string(q) == text);
    }
}

TEST_CASE("rank: Bareiss against naive elimination") {
    std::mt19937_64 rng(15);
    std::uniform_int_distribution<int> dim(1, 7);
    std::bernoulli_distribution sparse(0.4);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = dim(rng);
        const std::size_t cols = dim(rng);
        RationalMatrix m(rows, cols);
        std::vector<std::vector<Rational>> copy(rows, std::vector<Rational>(cols));
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                m(r, c) = sparse(rng) ? Rational(0) : random_rational(rng, 3);
                copy[r][c] = m(r, c);
            }
        }
        // Force some dependent rows.
        if (rows >= 3 && trial % 3 == 0) {
            for (std::size_t c = 0; c < cols; ++c) {
                m(2, c) = m(0, c) * make_rational(2, 3) - m(1, c);
                copy[2][c] = m(2, c);
            }
        }
        CHECK(rank(m) == pobs::testing::naive_rank(copy));
    }
    CHECK(rank(RationalMatrix(0, 4)) == 0);
}
