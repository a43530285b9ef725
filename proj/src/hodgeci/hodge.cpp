#include "pobs/hodgeci.hpp"

#include "pobs/error.hpp"

#include <algorithm>
#include <sstream>

namespace pobs::hodge {

using poly::Rational;

// ---------------------------------------------------------------- Multidegree

Multidegree::Multidegree(int n, std::vector<int> degrees) : n_(n), degrees_(std::move(degrees)) {
    if (n_ < 1) throw Error("hodgeci.invalid_multidegree", "dimension must be positive");
    if (degrees_.empty()) throw Error("hodgeci.invalid_multidegree", "at least one degree required");
    for (int d : degrees_) {
        if (d < 2) {
            throw Error("hodgeci.invalid_multidegree",
                        "degree " + std::to_string(d) + " not allowed (degrees must be >= 2)");
        }
    }
    std::sort(degrees_.begin(), degrees_.end());
}

mpz_class Multidegree::degree_product() const {
    mpz_class p = 1;
    for (int d : degrees_) p *= d;
    return p;
}

std::string Multidegree::to_string() const {
    std::ostringstream out;
    out << "V_" << n_ << '(';
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
        if (i > 0) out << ',';
        out << degrees_[i];
    }
    out << ')';
    return out.str();
}

// ---------------------------------------------------------------- TruncatedSeries

TruncatedSeries TruncatedSeries::one(std::size_t length) {
    TruncatedSeries s(length);
    if (length > 0) s[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
    TruncatedSeries out(length());
    for (std::size_t i = 0; i < length(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; i + j < length(); ++j) out[i + j] += coeffs_[i] * other[j];
    }
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    for (std::size_t i = 0; i < length(); ++i) coeffs_[i] += other[i];
    return *this;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& c) const {
    TruncatedSeries out(*this);
    for (auto& x : out.coeffs_) x *= c;
    return out;
}

TruncatedSeries TruncatedSeries::inverse() const {
    if (length() == 0 || coeffs_[0] == 0) throw Error("hodgeci.series", "series is not invertible");
    TruncatedSeries out(length());
    out[0] = Rational(1) / coeffs_[0];
    for (std::size_t i = 1; i < length(); ++i) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= i; ++j) acc += coeffs_[j] * out[i - j];
        out[i] = -acc * out[0];
    }
    return out;
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
    TruncatedSeries result = one(length());
    TruncatedSeries base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

TruncatedSeries TruncatedSeries::substitute_scaled(const Rational& a) const {
    TruncatedSeries out(*this);
    Rational power = 1;
    for (std::size_t i = 0; i < length(); ++i) {
        out[i] *= power;
        power *= a;
    }
    return out;
}

namespace {

Rational factorial(unsigned k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return Rational(f);
}

// x / (1 - e^{-x}), the Todd series of a line bundle with first Chern class x.
TruncatedSeries todd_line(std::size_t length) {
    TruncatedSeries denom(length);  // (1 - e^{-x}) / x = sum (-1)^k x^k / (k+1)!
    for (std::size_t k = 0; k < length; ++k) {
        denom[k] = Rational(k % 2 == 0 ? 1 : -1) / factorial(static_cast<unsigned>(k + 1));
    }
    return denom.inverse();
}

// 1 + a*h
TruncatedSeries linear(std::size_t length, const Rational& a) {
    TruncatedSeries s = TruncatedSeries::one(length);
    if (length > 1) s[1] = a;
    return s;
}

// Total Chern class of T_X: (1+h)^{N+1} / prod (1 + d_j h), truncated at h^{n+1}.
TruncatedSeries total_chern_tangent(const Multidegree& md) {
    const std::size_t len = static_cast<std::size_t>(md.n()) + 1;
    TruncatedSeries c = linear(len, 1).pow(static_cast<unsigned>(md.ambient_dimension() + 1));
    for (int d : md.degrees()) c = c * linear(len, d).inverse();
    return c;
}

}  // namespace

std::vector<Rational> chi_omega(const Multidegree& md) {
    const int n = md.n();
    const std::size_t len = static_cast<std::size_t>(n) + 1;

    // Elementary symmetric functions of the Chern roots of Omega_X: c_i(Omega) = (-1)^i c_i(T).
    const TruncatedSeries c_tangent = total_chern_tangent(md);
    std::vector<Rational> elem(len);
    for (std::size_t i = 0; i < len; ++i) elem[i] = (i % 2 == 0) ? c_tangent[i] : Rational(-c_tangent[i]);

    // Newton's identities: power sums p_s of the roots (each a multiple of h^s).
    std::vector<Rational> power_sums(len);
    power_sums[0] = n;
    for (std::size_t s = 1; s < len; ++s) {
        Rational acc = 0;
        for (std::size_t i = 1; i < s; ++i) {
            const Rational term = elem[i] * power_sums[s - i];
            acc += (i % 2 == 1) ? term : Rational(-term);
        }
        const Rational last = elem[s] * static_cast<long>(s);
        acc += (s % 2 == 1) ? last : Rational(-last);
        power_sums[s] = acc;
    }

    // P_m = sum_i e^{m * root_i} = sum_s m^s p_s h^s / s!.
    std::vector<TruncatedSeries> exp_power_sums;
    exp_power_sums.reserve(len);
    for (std::size_t m = 0; m < len; ++m) {
        TruncatedSeries series(len);
        Rational mpow = 1;
        for (std::size_t s = 0; s < len; ++s) {
            series[s] = mpow * power_sums[s] / factorial(static_cast<unsigned>(s));
            mpow *= static_cast<long>(m);
        }
        exp_power_sums.push_back(std::move(series));
    }

    // ch(Lambda^p Omega) = e_p(e^{roots}); Newton again: p E_p = sum (-1)^{i-1} E_{p-i} P_i.
    std::vector<TruncatedSeries> ch_wedge;
    ch_wedge.push_back(TruncatedSeries::one(len));
    for (int p = 1; p <= n; ++p) {
        TruncatedSeries acc(len);
        for (int i = 1; i <= p; ++i) {
            TruncatedSeries term = ch_wedge[static_cast<std::size_t>(p - i)] * exp_power_sums[static_cast<std::size_t>(i)];
            acc += (i % 2 == 1) ? term : term.scaled(-1);
        }
        ch_wedge.push_back(acc.scaled(Rational(1, p)));
    }

    // td(T_X) = td(O(1))^{N+1} / prod td(O(d_j)).
    const TruncatedSeries td_line = todd_line(len);
    TruncatedSeries todd = td_line.pow(static_cast<unsigned>(md.ambient_dimension() + 1));
    for (int d : md.degrees()) todd = todd * td_line.substitute_scaled(d).inverse();

    const Rational degree(md.degree_product());
    std::vector<Rational> chi;
    chi.reserve(len);
    for (int p = 0; p <= n; ++p) chi.push_back(degree * (ch_wedge[static_cast<std::size_t>(p)] * todd)[len - 1]);
    return chi;
}

mpz_class euler_characteristic(const Multidegree& md) {
    const TruncatedSeries c = total_chern_tangent(md);
    const Rational top = Rational(md.degree_product()) * c[static_cast<std::size_t>(md.n())];
    if (top.get_den() != 1) throw Error("hodgeci.internal", "non-integral Euler characteristic");
    return top.get_num();
}

// ---------------------------------------------------------------- HodgeDiamond

HodgeDiamond::HodgeDiamond(int n, std::vector<mpz_class> middle) : n_(n), middle_(std::move(middle)) {
    if (middle_.size() != static_cast<std::size_t>(n + 1)) {
        throw Error("hodgeci.internal", "middle row must have n+1 entries");
    }
}

mpz_class HodgeDiamond::h(int p, int q) const {
    if (p < 0 || q < 0 || p > n_ || q > n_) return 0;
    if (p + q == n_) return middle_[static_cast<std::size_t>(p)];
    return p == q ? 1 : 0;
}

mpz_class HodgeDiamond::primitive_middle(int p) const {
    mpz_class value = h(p, n_ - p);
    if (2 * p == n_) value -= 1;
    return value;
}

mpz_class HodgeDiamond::betti(int m) const {
    mpz_class total = 0;
    for (int p = 0; p <= m; ++p) total += h(p, m - p);
    return total;
}

HodgeDiamond hodge_diamond(const Multidegree& md) {
    const int n = md.n();
    const std::vector<Rational> chi = chi_omega(md);
    std::vector<mpz_class> middle;
    middle.reserve(static_cast<std::size_t>(n) + 1);
    for (int p = 0; p <= n; ++p) {
        // chi_p = sum_q (-1)^q h^{p,q}; off the middle only h^{p,p} = 1 contributes.
        const Rational off_middle = (2 * p == n) ? Rational(0) : Rational(p % 2 == 0 ? 1 : -1);
        Rational value = chi[static_cast<std::size_t>(p)] - off_middle;
        if ((n - p) % 2 != 0) value = -value;
        if (value.get_den() != 1 || value < 0) {
            throw Error("hodgeci.internal", "HRR produced h^{" + std::to_string(p) + "," +
                                                std::to_string(n - p) + "} = " + value.get_str() +
                                                " for " + md.to_string());
        }
        middle.push_back(value.get_num());
    }
    return HodgeDiamond(n, std::move(middle));
}

std::vector<mpz_class> griffiths_middle_hodge(int d, int n) {
    if (d < 2 || n < 0) throw Error("hodgeci.invalid_multidegree", "need d >= 2 and n >= 0");
    const int vars = n + 2;
    const int cap = d - 2;
    std::vector<mpz_class> out;
    for (int p = 0; p <= n; ++p) {
        const int target = (n + 1 - p) * d - (n + 2);
        if (target < 0) {
            out.emplace_back(0);
            continue;
        }
        // ways[t] = number of exponent vectors over the variables so far with sum t.
        std::vector<mpz_class> ways(static_cast<std::size_t>(target) + 1);
        ways[0] = 1;
        for (int v = 0; v < vars; ++v) {
            std::vector<mpz_class> next(ways.size());
            for (int t = 0; t <= target; ++t) {
                if (ways[static_cast<std::size_t>(t)] == 0) continue;
                for (int e = 0; e <= cap && t + e <= target; ++e) {
                    next[static_cast<std::size_t>(t + e)] += ways[static_cast<std::size_t>(t)];
                }
            }
            ways = std::move(next);
        }
        out.push_back(ways[static_cast<std::size_t>(target)]);
    }
    return out;
}

std::string HodgeLevel::to_string() const { return value ? std::to_string(*value) : "constant"; }

HodgeLevel hodge_level(const Multidegree& md) {
    const HodgeDiamond diamond = hodge_diamond(md);
    const int n = md.n();
    HodgeLevel level;
    for (int p = 0; p <= n; ++p) {
        if (diamond.primitive_middle(p) == 0) continue;
        const int gap = std::abs(2 * p - n);
        if (!level.value || gap > *level.value) level.value = gap;
    }
    return level;
}

std::vector<Multidegree> scan_level1(const ScanBox& box) {
    if (box.n_max < 3) throw Error("hodgeci.scan_box", "n_max must be at least 3");
    std::vector<Multidegree> found;
    for (int n = 3; n <= box.n_max; n += 2) {
        for (int k = 1; k <= box.k_max; ++k) {
            std::vector<int> degrees(static_cast<std::size_t>(k), 2);
            if (box.d_max < 2) break;
            // Odometer over nondecreasing degree lists.
            for (;;) {
                Multidegree md(n, degrees);
                const HodgeLevel level = hodge_level(md);
                if (level.value == 1) found.push_back(md);

                int pos = k - 1;
                while (pos >= 0 && degrees[static_cast<std::size_t>(pos)] == box.d_max) --pos;
                if (pos < 0) break;
                const int bumped = degrees[static_cast<std::size_t>(pos)] + 1;
                for (int i = pos; i < k; ++i) degrees[static_cast<std::size_t>(i)] = bumped;
            }
        }
    }
    std::sort(found.begin(), found.end());
    return found;
}

std::int64_t linear_system_dim(int ambient_dim, int degree) {
    if (ambient_dim < 1 || degree < 1) throw Error("hodgeci.linear_system", "need N, d >= 1");
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(ambient_dim + degree),
                 static_cast<unsigned long>(degree));
    b -= 1;
    if (!b.fits_slong_p()) throw Error("hodgeci.overflow", "linear system dimension exceeds 64 bits");
    return b.get_si();
}

BettiVector betti_vector_smooth(const Multidegree& md) {
    const HodgeDiamond diamond = hodge_diamond(md);
    std::vector<std::int64_t> entries;
    for (int m = 0; m <= 2 * md.n(); ++m) {
        const mpz_class b = diamond.betti(m);
        if (!b.fits_slong_p()) throw Error("hodgeci.overflow", "Betti number exceeds 64 bits");
        entries.push_back(b.get_si());
    }
    return BettiVector(md.n(), std::move(entries));
}

}  // namespace pobs::hodge
