#include "pobs/error.hpp"
#include "pobs/idealcalc.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pobs::ideal {

namespace {

struct OrderGreater {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order_greater(order, a, b); }
};

// Working polynomial: begin() is the leading term.
using Working = std::map<Monomial, Rational, OrderGreater>;

Working to_working(const MultiPoly& p, MonomialOrder order) {
    Working w(OrderGreater{order});
    for (const auto& [m, c] : p.terms()) w.emplace(m, c);
    return w;
}

MultiPoly from_working(const Working& w, std::size_t arity) {
    MultiPoly p(arity);
    for (const auto& [m, c] : w) p.add_term(m, c);
    return p;
}

void add_scaled_shifted(Working& target, const MultiPoly& source, const Rational& scale,
                        const Monomial& shift) {
    for (const auto& [m, c] : source.terms()) {
        const Monomial shifted = m * shift;
        auto [it, inserted] = target.try_emplace(shifted, 0);
        it->second += scale * c;
        if (it->second == 0) target.erase(it);
    }
}

struct Divisor {
    const MultiPoly* poly;
    Monomial lead;
    Rational lead_coeff;
};

std::vector<Divisor> make_divisors(const std::vector<MultiPoly>& polys, MonomialOrder order) {
    std::vector<Divisor> out;
    out.reserve(polys.size());
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        out.push_back({&p, leading_monomial(p, order), leading_coefficient(p, order)});
    }
    return out;
}

MultiPoly reduce_with(const MultiPoly& p, const std::vector<Divisor>& divisors, MonomialOrder order) {
    Working work = to_working(p, order);
    Working remainder(OrderGreater{order});
    while (!work.empty()) {
        auto lead = work.begin();
        const Divisor* hit = nullptr;
        for (const auto& d : divisors) {
            if (d.lead.divides(lead->first)) {
                hit = &d;
                break;
            }
        }
        if (hit == nullptr) {
            remainder.insert(*lead);
            work.erase(lead);
            continue;
        }
        const Monomial shift = hit->lead.quotient_of(lead->first);
        const Rational scale = -lead->second / hit->lead_coeff;
        add_scaled_shifted(work, *hit->poly, scale, shift);
    }
    return from_working(remainder, p.arity());
}

MultiPoly make_monic(const MultiPoly& p, MonomialOrder order) {
    const Rational lc = leading_coefficient(p, order);
    return lc == 1 ? p : poly::scalar_mul(Rational(1) / lc, p);
}

// Buchberger's chain criterion on the set of untreated pairs.
bool chain_criterion(std::size_t i, std::size_t j, const std::vector<Monomial>& leads,
                     const std::set<std::pair<std::size_t, std::size_t>>& pending) {
    const Monomial l = leads[i].lcm(leads[j]);
    auto key = [](std::size_t a, std::size_t b) { return std::pair{std::min(a, b), std::max(a, b)}; };
    for (std::size_t k = 0; k < leads.size(); ++k) {
        if (k == i || k == j) continue;
        if (!leads[k].divides(l)) continue;
        if (pending.contains(key(i, k)) || pending.contains(key(j, k))) continue;
        return true;
    }
    return false;
}

}  // namespace

std::string to_string(MonomialOrder order) {
    return order == MonomialOrder::Lex ? "lex" : "grevlex";
}

bool order_greater(MonomialOrder order, const Monomial& a, const Monomial& b) {
    const std::size_t n = a.arity();
    if (order == MonomialOrder::Lex) {
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] != b[i]) return a[i] > b[i];
        }
        return false;
    }
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = n; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

Monomial leading_monomial(const MultiPoly& p, MonomialOrder order) {
    if (p.is_zero()) throw Error("idealcalc.zero", "zero polynomial has no leading term");
    const Monomial* best = nullptr;
    for (const auto& [m, c] : p.terms()) {
        if (best == nullptr || order_greater(order, m, *best)) best = &m;
    }
    return *best;
}

Rational leading_coefficient(const MultiPoly& p, MonomialOrder order) {
    return p.coefficient(leading_monomial(p, order));
}

// ---------------------------------------------------------------- GroebnerBasis

GroebnerBasis::GroebnerBasis(std::vector<MultiPoly> generators, MonomialOrder order,
                             std::size_t arity)
    : generators_(std::move(generators)), order_(order), arity_(arity) {
    std::sort(generators_.begin(), generators_.end(), [order](const auto& a, const auto& b) {
        return order_greater(order, leading_monomial(a, order), leading_monomial(b, order));
    });
    leading_.reserve(generators_.size());
    for (const auto& g : generators_) leading_.push_back(leading_monomial(g, order));
}

bool GroebnerBasis::is_unit_ideal() const {
    return std::any_of(leading_.begin(), leading_.end(), [](const auto& m) { return m.is_one(); });
}

std::string GroebnerBasis::serialize() const {
    std::ostringstream out;
    out << "# order " << to_string(order_) << " arity " << arity_ << '\n';
    for (const auto& g : generators_) out << poly::to_string(g) << '\n';
    return out.str();
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, MonomialOrder order) {
    const Monomial lf = leading_monomial(f, order);
    const Monomial lg = leading_monomial(g, order);
    const Monomial l = lf.lcm(lg);
    Working w = to_working(MultiPoly(f.arity()), order);
    add_scaled_shifted(w, f, Rational(1) / leading_coefficient(f, order), lf.quotient_of(l));
    add_scaled_shifted(w, g, Rational(-1) / leading_coefficient(g, order), lg.quotient_of(l));
    return from_working(w, f.arity());
}

MultiPoly reduce(const MultiPoly& p, const std::vector<MultiPoly>& divisors, MonomialOrder order) {
    for (const auto& d : divisors) {
        if (d.arity() != p.arity()) throw Error("idealcalc.arity_mismatch", "divisor arity differs");
    }
    return reduce_with(p, make_divisors(divisors, order), order);
}

GroebnerBasis buchberger(const std::vector<MultiPoly>& gens, MonomialOrder order) {
    if (gens.empty()) throw Error("idealcalc.empty", "no generators");
    const std::size_t arity = gens.front().arity();
    std::vector<MultiPoly> basis;
    for (const auto& g : gens) {
        if (g.arity() != arity) throw Error("idealcalc.arity_mismatch", "generators differ in arity");
        if (!g.is_zero()) basis.push_back(make_monic(g, order));
    }
    if (basis.empty()) throw Error("idealcalc.zero", "all generators are zero");

    std::vector<Monomial> leads;
    for (const auto& g : basis) leads.push_back(leading_monomial(g, order));

    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t j = 1; j < basis.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) pending.emplace(i, j);
    }

    while (!pending.empty()) {
        // Normal selection strategy: smallest lcm first.
        auto pick = pending.begin();
        Monomial pick_lcm = leads[pick->first].lcm(leads[pick->second]);
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            Monomial l = leads[it->first].lcm(leads[it->second]);
            if (order_greater(order, pick_lcm, l)) {
                pick = it;
                pick_lcm = std::move(l);
            }
        }
        const auto [i, j] = *pick;
        pending.erase(pick);

        if (leads[i].coprime(leads[j])) continue;
        if (chain_criterion(i, j, leads, pending)) continue;

        MultiPoly r = reduce_with(s_polynomial(basis[i], basis[j], order),
                                  make_divisors(basis, order), order);
        if (r.is_zero()) continue;
        basis.push_back(make_monic(r, order));
        leads.push_back(leading_monomial(basis.back(), order));
        const std::size_t added = basis.size() - 1;
        for (std::size_t k = 0; k < added; ++k) pending.emplace(k, added);
    }

    // Minimalize: drop generators whose leading monomial is divisible by another's.
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j || !leads[j].divides(leads[i])) continue;
            // Equal leading monomials: keep the lowest index.
            redundant = leads[i] != leads[j] || j < i;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }

    // Interreduce tails.
    std::vector<MultiPoly> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j) {
            if (j != i) others.push_back(minimal[j]);
        }
        const Monomial lead = leading_monomial(minimal[i], order);
        MultiPoly tail = minimal[i];
        tail.add_term(lead, -tail.coefficient(lead));
        MultiPoly g = MultiPoly::monomial(lead) + reduce(tail, others, order);
        reduced.push_back(std::move(g));
    }
    return GroebnerBasis(std::move(reduced), order, arity);
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& gb) {
    if (p.arity() != gb.arity()) throw Error("idealcalc.arity_mismatch", "polynomial arity differs");
    return reduce(p, gb.generators(), gb.order());
}

bool ideal_contains(const GroebnerBasis& gb, const MultiPoly& p) { return normal_form(p, gb).is_zero(); }

bool is_artinian(const GroebnerBasis& gb) {
    for (std::size_t v = 0; v < gb.arity(); ++v) {
        const bool has_pure_power = std::any_of(
            gb.leading_monomials().begin(), gb.leading_monomials().end(), [&](const Monomial& m) {
                for (std::size_t i = 0; i < m.arity(); ++i) {
                    if (i != v && m[i] != 0) return false;
                }
                return true;
            });
        if (!has_pure_power) return false;
    }
    return true;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, std::optional<unsigned> cap) {
    if (!cap && !is_artinian(gb)) {
        throw Error("idealcalc.infinite_staircase", "quotient is not Artinian; a degree cap is required");
    }
    const auto& leads = gb.leading_monomials();
    auto standard = [&](const Monomial& m) {
        return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    };

    std::vector<Monomial> out;
    std::vector<Monomial> layer;
    if (standard(Monomial(gb.arity()))) layer.emplace_back(gb.arity());
    for (unsigned degree = 0; !layer.empty(); ++degree) {
        std::sort(layer.begin(), layer.end(), std::greater<>());
        out.insert(out.end(), layer.begin(), layer.end());
        if (cap && degree >= *cap) break;

        // Divisors of a standard monomial are standard, so each layer grows from the previous one.
        std::set<Monomial> next;
        for (const auto& m : layer) {
            for (std::size_t v = 0; v < gb.arity(); ++v) {
                Monomial up = m;
                ++up[v];
                if (standard(up)) next.insert(std::move(up));
            }
        }
        layer.assign(next.begin(), next.end());
    }
    return out;
}

std::size_t quotient_dimension(const GroebnerBasis& gb) { return standard_monomials(gb).size(); }

int krull_dimension(const GroebnerBasis& gb) {
    if (gb.is_unit_ideal()) return -1;
    const std::size_t n = gb.arity();
    if (n > 24) throw Error("idealcalc.too_many_variables", "subset search limited to 24 variables");

    std::vector<std::uint32_t> supports;
    for (const auto& m : gb.leading_monomials()) {
        std::uint32_t mask = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] != 0) mask |= 1U << i;
        }
        supports.push_back(mask);
    }
    int best = 0;
    const std::uint32_t limit = n == 32 ? 0xffffffffU : (1U << n);
    for (std::uint32_t subset = 0; subset < limit; ++subset) {
        const int size = __builtin_popcount(subset);
        if (size <= best) continue;
        const bool independent = std::none_of(supports.begin(), supports.end(),
                                              [subset](std::uint32_t s) { return (s & ~subset) == 0; });
        if (independent) best = size;
    }
    return best;
}

int projective_dimension(const GroebnerBasis& gb) {
    for (const auto& g : gb.generators()) {
        if (!g.is_homogeneous()) throw Error("idealcalc.not_homogeneous", "ideal is not homogeneous");
    }
    const int cone = krull_dimension(gb);
    return cone <= 0 ? -1 : cone - 1;
}

}  // namespace pobs::ideal
