#ifndef POBS_EXACT_MATRIX_HPP
#define POBS_EXACT_MATRIX_HPP

#include "pobs/polyring.hpp"

#include <cstddef>
#include <ostream>
#include <vector>

namespace pobs::poly {

// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    // Comma-separated exact values, one row per line.
    void write_csv(std::ostream& out) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

// Exact rank. Rows are scaled to integers, then reduced with Bareiss
// fraction-free elimination so every intermediate entry stays in Z.
std::size_t rank(const RationalMatrix& m);

}  // namespace pobs::poly

#endif  // POBS_EXACT_MATRIX_HPP
