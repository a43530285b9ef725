#ifndef POBS_BETTI_VECTOR_HPP
#define POBS_BETTI_VECTOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pobs {

// Betti numbers b_0..b_{2n} of an n-dimensional variety. Only the middle entry
// b_n may be unknown; entries outside [0, 2n] read as 0.
class BettiVector {
public:
    BettiVector(int n, std::vector<std::int64_t> entries, bool middle_known = true);

    // Vector whose middle entry is unknown; entries[n] is ignored.
    static BettiVector with_unknown_middle(int n, std::vector<std::int64_t> entries);

    int n() const noexcept { return n_; }
    bool middle_known() const noexcept { return middle_known_; }

    // b_j, 0 outside [0, 2n]. Throws when asked for an unknown middle entry.
    std::int64_t at(int j) const;
    std::optional<std::int64_t> maybe(int j) const;

    const std::vector<std::int64_t>& raw() const noexcept { return entries_; }
    void set(int j, std::int64_t value);

    // "(1,0,1,?,6,0,1)"
    std::string to_string() const;

    friend bool operator==(const BettiVector& a, const BettiVector& b);

private:
    int n_;
    std::vector<std::int64_t> entries_;
    bool middle_known_;
};

}  // namespace pobs

#endif  // POBS_BETTI_VECTOR_HPP
