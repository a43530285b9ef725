#ifndef POBS_HODGECI_HPP
#define POBS_HODGECI_HPP

#include "pobs/betti_vector.hpp"
#include "pobs/polyring.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace pobs::hodge {

// Smooth complete intersection V_n(d_1, ..., d_k) in P^{n+k}.
class Multidegree {
public:
    Multidegree(int n, std::vector<int> degrees);

    int n() const noexcept { return n_; }
    const std::vector<int>& degrees() const noexcept { return degrees_; }
    int codimension() const noexcept { return static_cast<int>(degrees_.size()); }
    int ambient_dimension() const noexcept { return n_ + codimension(); }
    mpz_class degree_product() const;

    // "V_3(2,3)"
    std::string to_string() const;

    friend bool operator==(const Multidegree&, const Multidegree&) = default;
    friend auto operator<=>(const Multidegree&, const Multidegree&) = default;

private:
    int n_;
    std::vector<int> degrees_;
};

// Coefficients of h^0..h^{len-1} in Q[h]/(h^len).
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t length) : coeffs_(length) {}
    static TruncatedSeries one(std::size_t length);

    std::size_t length() const noexcept { return coeffs_.size(); }
    poly::Rational& operator[](std::size_t i) { return coeffs_[i]; }
    const poly::Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    TruncatedSeries operator*(const TruncatedSeries& other) const;
    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries scaled(const poly::Rational& c) const;
    TruncatedSeries inverse() const;
    TruncatedSeries pow(unsigned e) const;
    // f(h) -> f(a*h)
    TruncatedSeries substitute_scaled(const poly::Rational& a) const;

private:
    std::vector<poly::Rational> coeffs_;
};

// Hodge numbers of a smooth complete intersection. Off the middle row
// h^{p,q} = delta_{pq}; the middle row is stored explicitly (and includes the
// hyperplane class at h^{m,m} when n = 2m).
class HodgeDiamond {
public:
    HodgeDiamond(int n, std::vector<mpz_class> middle);

    int n() const noexcept { return n_; }
    const std::vector<mpz_class>& middle() const noexcept { return middle_; }

    mpz_class h(int p, int q) const;
    // Primitive part of h^{p,n-p}.
    mpz_class primitive_middle(int p) const;
    mpz_class betti(int m) const;

private:
    int n_;
    std::vector<mpz_class> middle_;
};

// Maximum |p - q| over nonzero primitive middle Hodge numbers; empty when none.
struct HodgeLevel {
    std::optional<int> value;

    bool is_constant() const noexcept { return !value.has_value(); }
    std::string to_string() const;
    friend bool operator==(const HodgeLevel&, const HodgeLevel&) = default;
};

// chi(X, Omega^p) for p = 0..n via Hirzebruch-Riemann-Roch.
std::vector<poly::Rational> chi_omega(const Multidegree& md);

// Topological Euler characteristic: deg(X) times the top Chern class coefficient.
mpz_class euler_characteristic(const Multidegree& md);

HodgeDiamond hodge_diamond(const Multidegree& md);

// Primitive middle Hodge numbers h^{p,n-p} of a smooth degree-d hypersurface,
// counted in the Fermat Jacobian ring.
std::vector<mpz_class> griffiths_middle_hodge(int d, int n);

HodgeLevel hodge_level(const Multidegree& md);

struct ScanBox {
    int n_max = 9;
    int d_max = 6;
    int k_max = 4;
};

// All V_n(d_1..d_k) with odd 3 <= n <= n_max, k <= k_max, 2 <= d_j <= d_max and
// level exactly 1, in ascending (n, degrees) order. Certified only inside the box.
std::vector<Multidegree> scan_level1(const ScanBox& box);

// dim |O_{P^N}(d)| = binomial(N + d, d) - 1.
std::int64_t linear_system_dim(int ambient_dim, int degree);

BettiVector betti_vector_smooth(const Multidegree& md);

}  // namespace pobs::hodge

#endif  // POBS_HODGECI_HPP
