#ifndef RAYLEIGH_RATIO_EXPANSION_HPP
#define RAYLEIGH_RATIO_EXPANSION_HPP

// Closed-form expansion of J_{nu+p}(xi) / J_{nu+1}(xi) at a zero xi of J_nu
// as a polynomial in 2/xi whose coefficients are polynomials in nu:
//
//   sum_{q=0}^{qmax} (-1)^q C(p-1-q, q) (nu+q+1)...(nu+p-q-1) (2/xi)^{p-1-2q}
//
// with qmax = (p-1)/2 for odd p and (p-2)/2 for even p.

#include "rayleigh/polynomial.hpp"
#include "rayleigh/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace rayleigh {

/// Gamma(nu+upper)/Gamma(nu+lower) = prod_{i=lower}^{upper-1} (nu+i).
inline Poly gamma_ratio_poly(long upper_shift, long lower_shift) {
    if (lower_shift < 0 || upper_shift < lower_shift)
        throw std::invalid_argument("not a polynomial: Gamma(nu+" + std::to_string(upper_shift) + ")/Gamma(nu+" +
                                    std::to_string(lower_shift) + ")");
    return rising_product<Rational>(lower_shift, upper_shift);
}

constexpr long ratio_max_q(long p) { return p % 2 == 1 ? (p - 1) / 2 : (p - 2) / 2; }

/// C(p-1-q, q) = [(p-1)-q]! / ([(p-1)-2q]! q!)
inline BigInt ratio_binomial(long p, long q) {
    return factorial(static_cast<unsigned>(p - 1 - q)) /
           (factorial(static_cast<unsigned>(p - 1 - 2 * q)) * factorial(static_cast<unsigned>(q)));
}

/// Coefficient of (2/xi)^{p-1-2q}, sign included.
inline Poly ratio_coefficient(long p, long q) {
    if (p < 1) throw std::invalid_argument("ratio_coefficient: p must be >= 1");
    if (q < 0 || q > ratio_max_q(p))
        throw std::out_of_range("ratio_coefficient: q=" + std::to_string(q) + " outside 0.." +
                                std::to_string(ratio_max_q(p)) + " for p=" + std::to_string(p));
    Rational c(ratio_binomial(p, q));
    if (q % 2 == 1) c = -c;
    return gamma_ratio_poly(p - q, q + 1) * c;
}

struct RatioTerm {
    long q = 0;
    Poly coeff;
    long power = 0;  ///< exponent of (2/xi)
};

struct RatioExpansion {
    long p = 0;
    std::vector<RatioTerm> terms;

    /// Value at a given nu and xi in floating point.
    [[nodiscard]] double evaluate(double nu, double xi) const {
        double sum = 0.0;
        for (const auto& t : terms) {
            double c = t.coeff.evaluate<double>(nu);
            sum += c * std::pow(2.0 / xi, static_cast<double>(t.power));
        }
        return sum;
    }

    /// Exact value for rational nu and rational x = 1/xi.
    [[nodiscard]] Rational evaluate_exact(const Rational& nu, const Rational& inv_xi) const {
        Rational sum = 0;
        for (const auto& t : terms) {
            Rational w = 1;
            for (long i = 0; i < t.power; ++i) w *= 2 * inv_xi;
            sum += t.coeff(nu) * w;
        }
        return sum;
    }

    /// Coefficients of x^j (x = 1/xi) as polynomials in nu, index = power of x.
    [[nodiscard]] std::vector<Poly> in_inverse_xi() const {
        std::vector<Poly> out(static_cast<std::size_t>(p), Poly{});
        for (const auto& t : terms) out[static_cast<std::size_t>(t.power)] += t.coeff * Rational(pow2(static_cast<unsigned>(t.power)));
        while (!out.empty() && out.back().is_zero()) out.pop_back();
        return out;
    }
};

inline RatioExpansion build_ratio_expansion(long p) {
    if (p < 1) throw std::invalid_argument("build_ratio_expansion: p must be >= 1");
    RatioExpansion r{p, {}};
    for (long q = 0; q <= ratio_max_q(p); ++q) r.terms.push_back({q, ratio_coefficient(p, q), (p - 1) - 2 * q});
    return r;
}

}  // namespace rayleigh

#endif  // RAYLEIGH_RATIO_EXPANSION_HPP
