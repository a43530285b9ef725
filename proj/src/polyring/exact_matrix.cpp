#include "pobs/exact_matrix.hpp"

#include <utility>

namespace pobs::poly {

void RationalMatrix::write_csv(std::ostream& out) const {
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c > 0) out << ',';
            out << (*this)(r, c).get_str();
        }
        out << '\n';
    }
}

std::size_t rank(const RationalMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        mpz_class scale = 1;
        for (std::size_t c = 0; c < cols; ++c) {
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
        }
        for (std::size_t c = 0; c < cols; ++c) {
            a[r][c] = m(r, c).get_num() * (scale / m(r, c).get_den());
        }
    }

    std::size_t rank = 0;
    mpz_class previous_pivot = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot_row = rank;
        while (pivot_row < rows && a[pivot_row][col] == 0) ++pivot_row;
        if (pivot_row == rows) continue;
        std::swap(a[rank], a[pivot_row]);

        const mpz_class pivot = a[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                // Bareiss step: the division is exact.
                a[r][c] = (pivot * a[r][c] - a[r][col] * a[rank][c]);
                mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), previous_pivot.get_mpz_t());
            }
            a[r][col] = 0;
        }
        previous_pivot = pivot;
        ++rank;
    }
    return rank;
}

}  // namespace pobs::poly
