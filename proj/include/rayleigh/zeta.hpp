#ifndef RAYLEIGH_ZETA_HPP
#define RAYLEIGH_ZETA_HPP

// Even zeta values from the Rayleigh sums. The zeros of J_{1/2} are k*pi,
// so sigma(p, 1/2) = zeta(2p) / pi^{2p}. Likewise the zeros of the
// spherical Bessel function j_nu are those of J_{nu+1/2}.

#include "rayleigh/sigma.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace rayleigh {

struct PrimePower {
    BigInt prime;  ///< unfactored cofactor when larger than the trial bound
    unsigned exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial division by every integer up to `bound`. A cofactor left over
/// (no divisor <= bound) is reported as a single entry with exponent 1.
inline std::vector<PrimePower> factor_integer(BigInt n, std::uint32_t bound = 1'000'000) {
    std::vector<PrimePower> out;
    if (n < 0) n = -n;
    for (std::uint32_t d = 2; d <= bound && n > 1; d += (d == 2 ? 1 : 2)) {
        if (BigInt(d) * d > n) break;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e > 0) out.push_back({BigInt(d), e});
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

/// zeta(2p) = coefficient * pi^{2p}
struct ZetaValue {
    long two_p = 0;
    Rational coefficient;
    std::vector<PrimePower> factored_denominator;

    /// e.g. "zeta(12) = 691 * pi^12 / (3^6 * 5^3 * 7^2 * 11 * 13)"
    [[nodiscard]] std::string to_text() const {
        std::string s = "zeta(" + std::to_string(two_p) + ") = ";
        const BigInt n = num(coefficient);
        if (n != 1) s += n.str() + " * ";
        s += "pi^" + std::to_string(two_p);
        if (factored_denominator.empty()) return s;
        std::string d;
        for (std::size_t i = 0; i < factored_denominator.size(); ++i) {
            const auto& f = factored_denominator[i];
            d += (i ? " * " : "") + f.prime.str() + (f.exponent > 1 ? "^" + std::to_string(f.exponent) : "");
        }
        if (factored_denominator.size() > 1) d = "(" + d + ")";
        return s + " / " + d;
    }

    /// coefficient * pi^{2p} with a 50-digit pi, printed to `digits` significant digits.
    [[nodiscard]] std::string to_decimal(int digits = 30) const {
        using Dec = boost::multiprecision::cpp_dec_float_50;
        const Dec pi = boost::math::constants::pi<Dec>();
        Dec v = Dec(num(coefficient).str()) / Dec(den(coefficient).str());
        for (long i = 0; i < two_p; ++i) v *= pi;
        return v.str(digits);
    }

    [[nodiscard]] double to_double() const {
        return rayleigh::to_double(coefficient) * std::pow(std::numbers::pi, static_cast<double>(two_p));
    }
};

inline ZetaValue zeta_even(long p, SigmaTable& table) {
    if (p < 1) throw std::invalid_argument("zeta_even: p must be >= 1");
    ZetaValue z;
    z.two_p = 2 * p;
    z.coefficient = eval_sigma_exact(derive_sigma(table, p), Rational(1, 2));
    z.factored_denominator = factor_integer(den(z.coefficient));
    return z;
}

/// Sum over the positive zeros of the spherical Bessel function j_nu of
/// xi^{-2p}: sigma(p, nu + 1/2).
inline Rational spherical_sigma(long p, const Rational& nu, SigmaTable& table) {
    return eval_sigma_exact(derive_sigma(table, p), nu + Rational(1, 2));
}

}  // namespace rayleigh

#endif  // RAYLEIGH_ZETA_HPP
