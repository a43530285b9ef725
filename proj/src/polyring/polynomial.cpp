#include "pobs/polyring.hpp"

#include "pobs/error.hpp"

#include <algorithm>
#include <numeric>

namespace pobs::poly {

Rational make_rational(long numerator, long denominator) {
    if (denominator == 0) {
        throw Error("polyring.zero_denominator", "rational with zero denominator");
    }
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

// ---------------------------------------------------------------- Monomial

std::uint64_t Monomial::degree() const noexcept {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
}

bool Monomial::is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += other.exps_[i];
    return out;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    Monomial out(other);
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] -= exps_[i];
    return out;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial out(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        out.exps_[i] = std::max(exps_[i], other.exps_[i]);
    }
    return out;
}

bool Monomial::coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    }
    return true;
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, std::uint32_t power) {
    Monomial m(arity);
    m.exps_.at(index) = power;
    return m;
}

// ---------------------------------------------------------------- MultiPoly

namespace {

void require_same_arity(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity() != b.arity()) {
        throw Error("polyring.arity_mismatch",
                    "arity " + std::to_string(a.arity()) + " vs " + std::to_string(b.arity()));
    }
}

}  // namespace

MultiPoly::MultiPoly(std::size_t arity) : arity_(arity) {
    if (arity == 0) throw Error("polyring.arity", "polynomial ring needs at least one variable");
}

MultiPoly MultiPoly::constant(std::size_t arity, const Rational& c) {
    MultiPoly p(arity);
    p.add_term(Monomial(arity), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index) {
    if (index >= arity) {
        throw Error("polyring.variable_index", "x" + std::to_string(index) + " outside arity " +
                                                   std::to_string(arity));
    }
    return monomial(Monomial::variable(arity, index));
}

MultiPoly MultiPoly::monomial(const Monomial& m, const Rational& c) {
    MultiPoly p(m.arity());
    p.add_term(m, c);
    return p;
}

long MultiPoly::degree() const {
    long best = -1;
    for (const auto& [m, c] : terms_) best = std::max(best, static_cast<long>(m.degree()));
    return best;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return t.first.degree() == d; });
}

Rational MultiPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient(Monomial(arity_)); }

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (m.arity() != arity_) {
        throw Error("polyring.arity_mismatch", "monomial arity differs from ring arity");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    require_same_arity(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    require_same_arity(*this, other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    require_same_arity(a, b);
    MultiPoly out(a.arity_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
    MultiPoly out(p.arity_);
    if (c == 0) return out;
    out.terms_ = p.terms_;
    for (auto& [m, coeff] : out.terms_) coeff *= c;
    return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
    MultiPoly result = constant(arity_, 1);
    MultiPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

MultiPoly add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
MultiPoly scalar_mul(const Rational& c, const MultiPoly& p) { return c * p; }

MultiPoly partial_derivative(const MultiPoly& p, std::size_t variable) {
    if (variable >= p.arity()) {
        throw Error("polyring.variable_index", "cannot differentiate by x" +
                                                   std::to_string(variable));
    }
    MultiPoly out(p.arity());
    for (const auto& [m, c] : p.terms()) {
        const auto e = m[variable];
        if (e == 0) continue;
        Monomial dm = m;
        dm[variable] = e - 1;
        out.add_term(dm, c * e);
    }
    return out;
}

Rational evaluate(const MultiPoly& p, std::span<const Rational> point) {
    if (point.size() != p.arity()) {
        throw Error("polyring.point_length", "point has " + std::to_string(point.size()) +
                                                 " coordinates, ring has " +
                                                 std::to_string(p.arity()));
    }
    Rational total = 0;
    Rational power;
    for (const auto& [m, c] : p.terms()) {
        Rational value = c;
        for (std::size_t i = 0; i < m.arity() && value != 0; ++i) {
            if (m[i] == 0) continue;
            mpq_class base = point[i];
            mpz_pow_ui(power.get_num_mpz_t(), base.get_num_mpz_t(), m[i]);
            mpz_pow_ui(power.get_den_mpz_t(), base.get_den_mpz_t(), m[i]);
            value *= power;
        }
        total += value;
    }
    return total;
}

MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> replacements,
                     std::size_t target_arity) {
    if (replacements.size() != p.arity()) {
        throw Error("polyring.arity_mismatch", "one replacement per variable required");
    }
    for (const auto& r : replacements) {
        if (r.arity() != target_arity) {
            throw Error("polyring.arity_mismatch", "replacement has wrong arity");
        }
    }
    // powers[i][e] = replacements[i]^e, filled lazily.
    std::vector<std::vector<MultiPoly>> powers(p.arity());
    auto power_of = [&](std::size_t i, std::uint32_t e) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(MultiPoly::constant(target_arity, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * replacements[i]);
        return cache[e];
    };

    MultiPoly out(target_arity);
    for (const auto& [m, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(target_arity, c);
        for (std::size_t i = 0; i < m.arity(); ++i) {
            if (m[i] != 0) term = term * power_of(i, m[i]);
        }
        out += term;
    }
    return out;
}

MultiPoly restrict_to_hyperplane(const MultiPoly& p, const MultiPoly& hyperplane,
                                 std::size_t eliminated) {
    require_same_arity(p, hyperplane);
    if (eliminated >= p.arity()) {
        throw Error("polyring.variable_index", "eliminated variable outside ring");
    }
    if (p.arity() < 2) {
        throw Error("polyring.arity", "cannot eliminate the only variable");
    }
    if (hyperplane.degree() != 1 || !hyperplane.is_homogeneous()) {
        throw Error("polyring.nonlinear_hyperplane", "hyperplane must be a homogeneous linear form");
    }
    const auto target = p.arity() - 1;
    const Rational pivot = hyperplane.coefficient(Monomial::variable(p.arity(), eliminated));
    if (pivot == 0) {
        throw Error("polyring.zero_pivot", "hyperplane has zero coefficient on x" +
                                               std::to_string(eliminated));
    }

    std::vector<MultiPoly> replacements;
    replacements.reserve(p.arity());
    MultiPoly solved(target);
    for (std::size_t i = 0, j = 0; i < p.arity(); ++i) {
        if (i == eliminated) continue;
        const Rational a = hyperplane.coefficient(Monomial::variable(p.arity(), i));
        solved.add_term(Monomial::variable(target, j), -a / pivot);
        ++j;
    }
    for (std::size_t i = 0, j = 0; i < p.arity(); ++i) {
        if (i == eliminated) {
            replacements.push_back(solved);
        } else {
            replacements.push_back(MultiPoly::variable(target, j++));
        }
    }
    return substitute(p, replacements, target);
}

MultiPoly dehomogenize(const MultiPoly& p, std::size_t index) {
    if (index >= p.arity() || p.arity() < 2) {
        throw Error("polyring.variable_index", "invalid chart variable");
    }
    MultiPoly out(p.arity() - 1);
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint32_t> exps;
        exps.reserve(m.arity() - 1);
        for (std::size_t i = 0; i < m.arity(); ++i) {
            if (i != index) exps.push_back(m[i]);
        }
        out.add_term(Monomial(std::move(exps)), c);
    }
    return out;
}

}  // namespace pobs::poly
