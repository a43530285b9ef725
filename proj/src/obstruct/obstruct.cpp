#include "pobs/obstruct.hpp"

#include "pobs/error.hpp"

#include <algorithm>
#include <set>

namespace pobs::obstruct {

std::int64_t IHProfile::at(int k) const {
    if (k == 0) {
        if (!degree_zero) throw Error("obstruct.ih0_not_computed", "IH^0 is not derived from Betti numbers");
        return *degree_zero;
    }
    if (k < 0 || static_cast<std::size_t>(k) >= dims.size()) return 0;
    return dims[static_cast<std::size_t>(k)];
}

bool IHProfile::all_zero_above_zero() const {
    return std::all_of(dims.begin() + (dims.empty() ? 0 : 1), dims.end(), [](auto d) { return d == 0; });
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::NoObstructionFound: return "NO_OBSTRUCTION_FOUND";
        case Verdict::NoIrreducibleFiberCompactification: return "NO_IRREDUCIBLE_FIBER_COMPACTIFICATION";
        case Verdict::NoFlatCompactification: return "NO_FLAT_COMPACTIFICATION";
    }
    return "NO_OBSTRUCTION_FOUND";
}

const char* ObstructionVerdict::disclaimer() {
    return "Obstructions are necessary conditions only: NO_OBSTRUCTION_FOUND does not assert that a "
           "flat regular compactification exists.";
}

IHProfile ih_from_betti(const BettiVector& b, bool h_nonconstant) {
    if (!h_nonconstant) {
        throw Error("obstruct.hypothesis", "IH dimensions from Betti differences need a non-constant variation");
    }
    const int n = b.n();
    IHProfile profile;
    profile.dims.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int k = 1; k <= n; ++k) {
        const std::int64_t diff = b.at(n + k) - b.at(n - k);
        if (diff < 0) {
            throw Error("obstruct.input_inconsistent",
                        "b_" + std::to_string(n + k) + " < b_" + std::to_string(n - k) +
                            " contradicts nonnegativity of IH^" + std::to_string(k));
        }
        profile.dims[static_cast<std::size_t>(k)] = diff;
    }
    return profile;
}

std::vector<Witness> asymmetry_witnesses(const BettiVector& b) {
    std::vector<Witness> out;
    for (int k = 1; k <= b.n(); ++k) {
        const auto plus = b.at(b.n() + k);
        const auto minus = b.at(b.n() - k);
        if (plus != minus) out.push_back({k, plus, minus});
    }
    return out;
}

bool is_palindromic(const BettiVector& b) { return asymmetry_witnesses(b).empty(); }

bool is_weakly_palindromic(const BettiVector& b) {
    const auto w = asymmetry_witnesses(b);
    return std::all_of(w.begin(), w.end(), [](const Witness& x) { return x.k == 1; });
}

ObstructionVerdict verdict(const BettiVector& b, const Hypotheses& hypotheses) {
    if (!hypotheses.h_nonconstant || !hypotheses.abelian_scheme) {
        throw Error("obstruct.hypothesis",
                    "a verdict needs both hypotheses asserted: non-constant variation and abelian scheme");
    }
    ObstructionVerdict out;
    out.hypotheses = hypotheses;
    out.ih = ih_from_betti(b, hypotheses.h_nonconstant);
    out.witnesses = asymmetry_witnesses(b);
    out.palindromic = out.witnesses.empty();
    out.weakly_palindromic = std::all_of(out.witnesses.begin(), out.witnesses.end(),
                                         [](const Witness& w) { return w.k == 1; });
    if (!out.weakly_palindromic) {
        out.verdict = Verdict::NoFlatCompactification;
    } else if (!out.palindromic) {
        out.verdict = Verdict::NoIrreducibleFiberCompactification;
    } else {
        out.verdict = Verdict::NoObstructionFound;
    }
    return out;
}

CorObResult corob_check(const IHTable& table, int fiber_dim) {
    CorObResult out;
    const int top = 2 * fiber_dim;
    for (const auto& [jk, dim] : table) {
        if (dim < 0) throw Error("obstruct.negative_dimension", "IH table entries must be nonnegative");
        const auto [j, k] = jk;
        if (dim == 0) continue;
        if (j + k > top) {
            out.flat_excluded = true;
            out.witnesses.push_back(jk);
        } else if (j > 0 && k == top - j) {
            out.irreducible_excluded = true;
            out.witnesses.push_back(jk);
        }
    }
    if (auto it = table.find({0, top}); it != table.end() && it->second != 1) {
        out.irreducible_excluded = true;
        out.witnesses.emplace_back(0, top);
    }
    out.irreducible_excluded = out.irreducible_excluded || out.flat_excluded;
    return out;
}

IHTable table_from_profile(const IHProfile& profile, int g) {
    if (g < 1) throw Error("obstruct.fiber_dimension", "relative dimension must be positive");
    IHTable table;
    for (std::size_t j = 1; j < profile.dims.size(); ++j) {
        if (profile.dims[j] != 0) table[{static_cast<int>(j), 2 * g - 1}] = profile.dims[j];
    }
    return table;
}

std::vector<BudgetLine> budget_check(const IHTable& table, const BettiVector& fiber_betti) {
    std::map<int, std::int64_t> sums;
    for (int m = 0; m <= 2 * fiber_betti.n(); ++m) sums[m] = 0;
    for (const auto& [jk, dim] : table) sums[jk.first + jk.second] += dim;

    std::vector<BudgetLine> out;
    for (const auto& [m, sum] : sums) {
        const std::int64_t available = fiber_betti.at(m);
        out.push_back({m, sum, available, available - sum, sum <= available});
    }
    return out;
}

}  // namespace pobs::obstruct
