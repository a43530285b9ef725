#ifndef POBS_OBSTRUCT_HPP
#define POBS_OBSTRUCT_HPP

#include "pobs/betti_vector.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pobs::obstruct {

// Local intersection cohomology dimensions dim IH^k at the section's point of
// the dual space, for k = 0..n. IH^0 is not derived from Betti numbers.
struct IHProfile {
    std::optional<std::int64_t> degree_zero;
    std::vector<std::int64_t> dims;  // dims[k] for k >= 1; dims[0] unused

    std::int64_t at(int k) const;
    bool all_zero_above_zero() const;
};

// Caller-asserted mathematical hypotheses.
struct Hypotheses {
    bool h_nonconstant = false;
    bool abelian_scheme = false;
};

// Outcomes, ordered from weakest to strongest.
enum class Verdict { NoObstructionFound = 0, NoIrreducibleFiberCompactification = 1, NoFlatCompactification = 2 };

std::string to_string(Verdict v);

struct Witness {
    int k;
    std::int64_t b_plus;
    std::int64_t b_minus;
    friend bool operator==(const Witness&, const Witness&) = default;
};

struct ObstructionVerdict {
    bool weakly_palindromic = false;
    bool palindromic = false;
    Verdict verdict = Verdict::NoObstructionFound;
    std::vector<Witness> witnesses;
    IHProfile ih;
    Hypotheses hypotheses;

    static const char* disclaimer();
};

// dim IH^k = b_{n+k} - b_{n-k} for k >= 1. Requires the non-constancy hypothesis;
// a negative difference is reported as obstruct.input_inconsistent.
IHProfile ih_from_betti(const BettiVector& b, bool h_nonconstant);

// b_{n+k} = b_{n-k} for all k >= 1 (resp. k >= 2). The middle is never consulted.
bool is_palindromic(const BettiVector& b);
bool is_weakly_palindromic(const BettiVector& b);

// All k >= 1 with b_{n+k} != b_{n-k}.
std::vector<Witness> asymmetry_witnesses(const BettiVector& b);

ObstructionVerdict verdict(const BettiVector& b, const Hypotheses& hypotheses);

// (j, k) -> dim IH^j_s(R^k pi_* Q)
using IHTable = std::map<std::pair<int, int>, std::int64_t>;

struct CorObResult {
    bool flat_excluded = false;
    bool irreducible_excluded = false;
    std::vector<std::pair<int, int>> witnesses;
};

// An absent (0, 2n) entry is treated as not supplied rather than zero.
CorObResult corob_check(const IHTable& table, int fiber_dim);

// Table induced on an abelian fibration of relative dimension g whose
// R^{2g-1} is the variation measured by `profile`.
IHTable table_from_profile(const IHProfile& profile, int g);

struct BudgetLine {
    int m;
    std::int64_t ih_sum;
    std::int64_t fiber_betti;
    std::int64_t slack;
    bool pass;
};

// For each degree m: sum_{j+k=m} dim IH^j(R^k) <= b_m(fiber).
std::vector<BudgetLine> budget_check(const IHTable& table, const BettiVector& fiber_betti);

}  // namespace pobs::obstruct

#endif  // POBS_OBSTRUCT_HPP
