#include "pobs/error.hpp"
#include "pobs/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pobs::poly {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class PolyParser {
public:
    PolyParser(std::string_view text, std::size_t arity, const AliasTable& aliases)
        : text_(text), arity_(arity), aliases_(aliases) {}

    MultiPoly parse() {
        MultiPoly result(arity_);
        skip_ws();
        if (at_end()) fail("empty expression");

        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        result += parse_term(negate);
        skip_ws();
        while (!at_end()) {
            const char op = peek();
            if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
            ++pos_;
            result += parse_term(op == '-');
            skip_ws();
        }
        return result;
    }

private:
    MultiPoly parse_term(bool negate) {
        skip_ws();
        if (at_end()) fail("expected a term");

        Rational coeff = 1;
        bool have_factor = false;
        if (is_digit(peek())) {
            coeff = parse_coefficient();
            have_factor = true;
        }
        Monomial mono(arity_);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c == '*') {
                if (!have_factor) fail("'*' without a left operand");
                ++pos_;
                skip_ws();
                if (at_end() || !is_ident_start(peek())) fail("expected a variable after '*'");
                continue;
            }
            if (c == '/') fail("division is not allowed here");
            if (c == '(' || c == ')') fail("parentheses are not supported");
            if (is_digit(c)) fail("coefficient must precede the variables of a term");
            if (!is_ident_start(c)) break;
            const auto [index, power] = parse_atom();
            mono[index] += power;
            have_factor = true;
        }
        if (!have_factor) fail("expected a coefficient or variable");
        if (negate) coeff = -coeff;
        return MultiPoly::monomial(mono, coeff);
    }

    Rational parse_coefficient() {
        mpz_class num = parse_uint_z();
        skip_ws();
        if (!at_end() && peek() == '/') {
            ++pos_;
            skip_ws();
            if (at_end() || !is_digit(peek())) fail("division is only allowed between integers");
            mpz_class den = parse_uint_z();
            if (den == 0) fail("zero denominator");
            Rational r(num, den);
            r.canonicalize();
            return r;
        }
        return Rational(num);
    }

    std::pair<std::size_t, std::uint32_t> parse_atom() {
        const std::size_t start = pos_;
        while (!at_end() && is_ident_char(peek())) ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);

        std::size_t index = 0;
        if (auto it = aliases_.find(name); it != aliases_.end()) {
            index = it->second;
        } else if (name.size() > 1 && name[0] == 'x' &&
                   std::all_of(name.begin() + 1, name.end(), is_digit)) {
            index = std::stoul(std::string(name.substr(1)));
        } else {
            fail_at(start, "unknown variable '" + std::string(name) + "'");
        }
        if (index >= arity_) {
            fail_at(start, "variable index " + std::to_string(index) + " >= arity " +
                               std::to_string(arity_));
        }

        std::uint32_t power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            if (at_end() || !is_digit(peek())) fail("expected an exponent after '^'");
            const mpz_class e = parse_uint_z();
            if (e > 1'000'000) fail("exponent too large");
            power = static_cast<std::uint32_t>(e.get_ui());
        }
        return {index, power};
    }

    mpz_class parse_uint_z() {
        const std::size_t start = pos_;
        while (!at_end() && is_digit(peek())) ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())) != 0) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
    [[noreturn]] void fail_at(std::size_t where, const std::string& what) const {
        throw Error("polyring.parse", "at position " + std::to_string(where) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t arity_;
    const AliasTable& aliases_;
};

// Descending total degree, then descending exponent vector.
bool print_before(const Monomial& a, const Monomial& b) {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da > db;
    return a > b;
}

}  // namespace

MultiPoly parse_poly(std::string_view text, std::size_t arity, const AliasTable& aliases) {
    if (arity == 0) throw Error("polyring.arity", "arity must be positive");
    return PolyParser(text, arity, aliases).parse();
}

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front())) != 0) {
        body.remove_prefix(1);
    }
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())) != 0) {
        body.remove_suffix(1);
    }
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    auto digits_only = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), is_digit);
    };
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
    if (!digits_only(num) || !digits_only(den)) {
        throw Error("polyring.parse", "malformed rational '" + std::string(text) + "'");
    }
    mpz_class d(std::string{den});
    if (d == 0) throw Error("polyring.zero_denominator", "in '" + std::string(text) + "'");
    Rational r(mpz_class(std::string{num}), d);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

std::string to_string(const MultiPoly& p) {
    if (p.is_zero()) return "0";
    std::vector<const MultiPoly::TermMap::value_type*> ordered;
    ordered.reserve(p.term_count());
    for (const auto& t : p.terms()) ordered.push_back(&t);
    std::sort(ordered.begin(), ordered.end(),
              [](auto* a, auto* b) { return print_before(a->first, b->first); });

    std::ostringstream out;
    bool first = true;
    for (const auto* term : ordered) {
        const Monomial& m = term->first;
        Rational c = term->second;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        c = abs(c);

        bool wrote = false;
        if (c != 1 || m.is_one()) {
            out << c.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < m.arity(); ++i) {
            if (m[i] == 0) continue;
            if (wrote) out << '*';
            out << 'x' << i;
            if (m[i] > 1) out << '^' << m[i];
            wrote = true;
        }
    }
    return out.str();
}

}  // namespace pobs::poly
