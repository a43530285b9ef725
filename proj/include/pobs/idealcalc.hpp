#ifndef POBS_IDEALCALC_HPP
#define POBS_IDEALCALC_HPP

#include "pobs/polyring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pobs::ideal {

using poly::Monomial;
using poly::MultiPoly;
using poly::Rational;

enum class MonomialOrder { GradedReverseLex, Lex };

std::string to_string(MonomialOrder order);

// Strict "a > b" in the given order.
bool order_greater(MonomialOrder order, const Monomial& a, const Monomial& b);

Monomial leading_monomial(const MultiPoly& p, MonomialOrder order);
Rational leading_coefficient(const MultiPoly& p, MonomialOrder order);

// Reduced Groebner basis: monic generators, sorted by descending leading monomial.
class GroebnerBasis {
public:
    GroebnerBasis(std::vector<MultiPoly> generators, MonomialOrder order, std::size_t arity);

    const std::vector<MultiPoly>& generators() const noexcept { return generators_; }
    const std::vector<Monomial>& leading_monomials() const noexcept { return leading_; }
    MonomialOrder order() const noexcept { return order_; }
    std::size_t arity() const noexcept { return arity_; }

    bool is_unit_ideal() const;

    // Header line naming the order, then one generator per line.
    std::string serialize() const;

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        return a.order_ == b.order_ && a.generators_ == b.generators_;
    }

private:
    std::vector<MultiPoly> generators_;
    std::vector<Monomial> leading_;
    MonomialOrder order_;
    std::size_t arity_;
};

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens,
                         MonomialOrder order = MonomialOrder::GradedReverseLex);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, MonomialOrder order);

// Full reduction against an arbitrary list of divisors (not necessarily a basis).
MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& divisors, MonomialOrder order);

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb);
bool ideal_contains(const GroebnerBasis& gb, const MultiPoly& p);

// Monomials outside the leading-term ideal, by ascending degree. Without a cap
// the staircase must be finite (Artinian quotient).
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb,
                                         std::optional<unsigned> cap = std::nullopt);

// True when every variable has a pure power among the leading monomials.
bool is_artinian(const GroebnerBasis& gb);

// Dimension over Q of the quotient ring; requires an Artinian quotient.
std::size_t quotient_dimension(const GroebnerBasis& gb);

// Krull dimension of Q[x]/I: largest set of variables independent modulo in(I).
// Returns -1 for the unit ideal.
int krull_dimension(const GroebnerBasis& gb);

// Dimension of the projective zero set of a homogeneous ideal (-1 when empty).
int projective_dimension(const GroebnerBasis& gb);

}  // namespace pobs::ideal

#endif  // POBS_IDEALCALC_HPP
