#include "pobs/betti_vector.hpp"

#include "pobs/error.hpp"

#include <sstream>

namespace pobs {

BettiVector::BettiVector(int n, std::vector<std::int64_t> entries, bool middle_known)
    : n_(n), entries_(std::move(entries)), middle_known_(middle_known) {
    if (n < 0) throw Error("obstruct.betti_dimension", "dimension must be nonnegative");
    if (entries_.size() != static_cast<std::size_t>(2 * n + 1)) {
        throw Error("obstruct.betti_length", "expected " + std::to_string(2 * n + 1) + " entries, got " +
                                                 std::to_string(entries_.size()));
    }
    for (int j = 0; j <= 2 * n; ++j) {
        if (j == n && !middle_known_) continue;
        if (entries_[j] < 0) throw Error("obstruct.betti_negative", "b_" + std::to_string(j) + " < 0");
    }
    if (!middle_known_) entries_[n] = 0;
    if ((n > 0 || middle_known_) && entries_[0] < 1) {
        throw Error("obstruct.betti_b0", "b_0 must be at least 1");
    }
}

BettiVector BettiVector::with_unknown_middle(int n, std::vector<std::int64_t> entries) {
    return BettiVector(n, std::move(entries), false);
}

std::int64_t BettiVector::at(int j) const {
    if (j < 0 || j > 2 * n_) return 0;
    if (j == n_ && !middle_known_) {
        throw Error("obstruct.unknown_middle", "b_" + std::to_string(j) + " is unknown");
    }
    return entries_[j];
}

std::optional<std::int64_t> BettiVector::maybe(int j) const {
    if (j == n_ && !middle_known_) return std::nullopt;
    return at(j);
}

void BettiVector::set(int j, std::int64_t value) {
    if (j < 0 || j > 2 * n_) throw Error("obstruct.betti_index", "index outside [0, 2n]");
    if (value < 0) throw Error("obstruct.betti_negative", "b_" + std::to_string(j) + " < 0");
    entries_[j] = value;
    if (j == n_) middle_known_ = true;
}

std::string BettiVector::to_string() const {
    std::ostringstream out;
    out << '(';
    for (int j = 0; j <= 2 * n_; ++j) {
        if (j > 0) out << ',';
        if (j == n_ && !middle_known_) {
            out << '?';
        } else {
            out << entries_[j];
        }
    }
    out << ')';
    return out.str();
}

bool operator==(const BettiVector& a, const BettiVector& b) {
    return a.n_ == b.n_ && a.middle_known_ == b.middle_known_ && a.entries_ == b.entries_;
}

}  // namespace pobs
