#ifndef POBS_POLYRING_HPP
#define POBS_POLYRING_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pobs::poly {

// Exact coefficient field. mpq_class keeps values canonical as long as every
// value enters through a canonicalizing constructor (see make_rational).
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

// Parses "3", "-2", "2/3" (denominator must be positive and nonzero).
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    std::size_t arity() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

    std::uint64_t degree() const noexcept;
    bool divides(const Monomial& other) const;
    bool is_one() const noexcept;

    Monomial operator*(const Monomial& other) const;
    // Requires divides(other): returns other / *this.
    Monomial quotient_of(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;

    static Monomial variable(std::size_t arity, std::size_t index, std::uint32_t power = 1);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::uint32_t> exps_;
};

// Sparse polynomial in variables x0..x{arity-1} with rational coefficients.
// Zero coefficients are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit MultiPoly(std::size_t arity = 1);

    static MultiPoly constant(std::size_t arity, const Rational& c);
    static MultiPoly variable(std::size_t arity, std::size_t index);
    static MultiPoly monomial(const Monomial& m, const Rational& c = 1);

    std::size_t arity() const noexcept { return arity_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    // Total degree; -1 for the zero polynomial.
    long degree() const;
    // True when every monomial has the same total degree (the zero polynomial counts).
    bool is_homogeneous() const;
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;

    void add_term(const Monomial& m, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& c, const MultiPoly& p);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    MultiPoly pow(unsigned exponent) const;

private:
    std::size_t arity_;
    TermMap terms_;
};

MultiPoly add(const MultiPoly& a, const MultiPoly& b);
MultiPoly mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly scalar_mul(const Rational& c, const MultiPoly& p);
MultiPoly partial_derivative(const MultiPoly& p, std::size_t variable);

Rational evaluate(const MultiPoly& p, std::span<const Rational> point);

// Substitutes x_i -> replacements[i] (each of arity `target_arity`).
MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> replacements,
                     std::size_t target_arity);

// Solves the linear form `hyperplane` for x_eliminated and substitutes it into p.
// The remaining variables are renumbered consecutively, so the result has arity - 1.
MultiPoly restrict_to_hyperplane(const MultiPoly& p, const MultiPoly& hyperplane,
                                 std::size_t eliminated);

// Affine chart {x_index = 1}: substitutes 1 for x_index and drops the variable.
MultiPoly dehomogenize(const MultiPoly& p, std::size_t index);

// Optional alias table for named variables, e.g. {"x": 0, "y": 1}.
using AliasTable = std::map<std::string, std::size_t, std::less<>>;

MultiPoly parse_poly(std::string_view text, std::size_t arity, const AliasTable& aliases = {});

// Canonical form: terms by descending total degree, then descending lex exponent
// vector. Output re-parses to the same polynomial.
std::string to_string(const MultiPoly& p);

}  // namespace pobs::poly

#endif  // POBS_POLYRING_HPP
