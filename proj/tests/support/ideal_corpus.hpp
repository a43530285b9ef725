#ifndef POBS_TEST_IDEAL_CORPUS_HPP
#define POBS_TEST_IDEAL_CORPUS_HPP

#include "pobs/polyring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pobs::testing {

struct CorpusIdeal {
    std::size_t arity;
    std::vector<std::string> gens;
    // Known quotient dimension for Artinian entries (hand-checked), else empty.
    std::optional<std::size_t> artinian_dimension;
};

// Small ideals, a mix of Artinian and positive-dimensional ones.
inline const std::vector<CorpusIdeal>& ideal_corpus() {
    static const std::vector<CorpusIdeal> corpus{
        {2, {"x0", "x1"}, 1},
        {2, {"x0^2", "x1^2"}, 4},
        {2, {"x0^2 - x1", "x1^2"}, 4},
        {2, {"x0^2", "x0*x1"}, std::nullopt},
        {2, {"x0*x1"}, std::nullopt},
        {2, {"x0^3 - x1", "x1^2 - x0"}, 6},
        {2, {"x0^2 + x1^2 - 1", "x0 - x1"}, 2},
        {3, {"x0^2", "x1^2", "x2^2"}, 8},
        {3, {"x0 + x1 + x2", "x0*x1 + x1*x2 + x0*x2", "x0*x1*x2"}, 6},
        {3, {"x0^2 - x1*x2", "x1^2 - x0*x2", "x2^2 - x0*x1"}, std::nullopt},
        {3, {"x0*x1 - x2", "x1*x2 - x0", "x0*x2 - x1"}, 5},
        {3, {"x0^2 + x1 + x2 - 1", "x0 + x1^2 + x2 - 1", "x0 + x1 + x2^2 - 1"}, 8},
        {3, {"x0^3", "x1^3", "x2^3", "x0*x1*x2"}, 19},
        {3, {"x0*x1", "x1*x2", "x0*x2"}, std::nullopt},
        {3, {"x0^2 - x1", "x0^3 - x2"}, std::nullopt},
        {4, {"x0*x3 - x1*x2", "x0*x2 - x1^2", "x1*x3 - x2^2"}, std::nullopt},
        {4, {"x0^2", "x1^2", "x2^2", "x3^2"}, 16},
        {4, {"x0 - x1", "x1 - x2", "x2 - x3", "x3^3"}, 3},
        {3, {"3*x0^2", "3*x1^2", "3*x2^2"}, 8},
        {2, {"x0^2*x1 - 1", "x0*x1^2 - 1"}, 3},
        {3, {"x0^2 - 2", "x1^2 - 3", "x2 - x0*x1"}, 4},
        {2, {"x0^4 + x1^4 - 1", "x0*x1 - 1/2"}, 8},
        {3, {"x0*x1 + x2^2", "x0^2 - x1*x2"}, std::nullopt},
    };
    return corpus;
}

inline std::vector<poly::MultiPoly> corpus_generators(const CorpusIdeal& c) {
    std::vector<poly::MultiPoly> out;
    for (const auto& g : c.gens) out.push_back(poly::parse_poly(g, c.arity));
    return out;
}

}  // namespace pobs::testing

#endif  // POBS_TEST_IDEAL_CORPUS_HPP
