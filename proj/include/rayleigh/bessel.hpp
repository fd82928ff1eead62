#ifndef RAYLEIGH_BESSEL_HPP
#define RAYLEIGH_BESSEL_HPP

// Floating-point oracle for the Rayleigh sums: zeros of J_nu, truncated
// sums over them with an integral tail correction, and numeric checks of
// the residue identity and of the ratio expansion. binary64 throughout and
// independent of the exact derivation in sigma.hpp.

#include "rayleigh/ratio_expansion.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rayleigh {

/// Raised when the floating-point machinery cannot produce a trustworthy
/// result (no sign change found, vanishing denominators).
class numeric_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

// Miller backward recurrence for integer n >= x, normalised against the
// larger of J_0 and J_1. Boost's integer path divides by J_0 alone, which
// loses every digit at zeros of J_0.
inline double bessel_jn_miller(int n, double x) {
    const int top = n + 2 * (static_cast<int>(std::sqrt(40.0 * n)) + 10);
    double next = 0.0, cur = 1.0, at_n = 0.0, at_1 = 0.0;
    for (int k = top; k > 0; --k) {
        const double prev = 2.0 * k / x * cur - next;  // J_{k-1}
        next = cur;
        cur = prev;
        if (std::abs(cur) > 1e250) {
            next *= 1e-250;
            cur *= 1e-250;
            at_n *= 1e-250;
            at_1 *= 1e-250;
        }
        if (k - 1 == n) at_n = cur;
        if (k - 1 == 1) at_1 = cur;
    }
    const double j0 = boost::math::cyl_bessel_j(0, x), j1 = boost::math::cyl_bessel_j(1, x);
    return std::abs(j1) >= std::abs(j0) ? at_n * (j1 / at_1) : at_n * (j0 / cur);
}

}  // namespace detail

inline double bessel_j(double order, double x) {
    if (!(order >= 0.0) || !std::isfinite(order)) throw std::domain_error("bessel_j: order must be finite and >= 0");
    if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("bessel_j: x must be finite and > 0");
    if (order >= 2.0 && order == std::floor(order) && order >= x && x >= 5.0 && order <= x * x / 4.0 &&
        order < 1e6)
        return detail::bessel_jn_miller(static_cast<int>(order), x);
    return boost::math::cyl_bessel_j(order, x);
}

/// J'_nu(x) = (nu/x) J_nu(x) - J_{nu+1}(x)
inline double bessel_j_derivative(double order, double x) {
    return (order / x) * bessel_j(order, x) - bessel_j(order + 1.0, x);
}

/// First three terms of McMahon's expansion of the k-th zero of J_nu.
inline double mcmahon_zero(double nu, std::size_t k) {
    const double beta = std::numbers::pi * (static_cast<double>(k) + nu / 2.0 - 0.25);
    const double mu = 4.0 * nu * nu;
    const double b8 = 8.0 * beta;
    return beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8);
}

struct ZeroSet {
    double nu = 0.0;
    std::vector<double> zeros;     ///< xi_1 < xi_2 < ...
    std::vector<double> accuracy;  ///< estimated absolute error of each zero

    [[nodiscard]] std::size_t size() const noexcept { return zeros.size(); }
};

namespace detail {

/// Bracketed Newton iteration on [a, b] where J_nu changes sign.
inline std::pair<double, double> polish_zero(double nu, double a, double b, double seed) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    double fa = bessel_j(nu, a);
    double x = (seed > a && seed < b) ? seed : 0.5 * (a + b);
    for (int iter = 0; iter < 200; ++iter) {
        const double f = bessel_j(nu, x);
        if (f == 0.0) break;
        if ((f > 0) == (fa > 0)) {
            a = x;
            fa = f;
        } else {
            b = x;
        }
        const double d = (nu / x) * f - bessel_j(nu + 1.0, x);
        double next = (d != 0.0) ? x - f / d : 0.5 * (a + b);
        if (!(next > a && next < b)) next = 0.5 * (a + b);
        const bool done = std::abs(next - x) <= 2.0 * eps * std::abs(next) || (b - a) <= 4.0 * eps * std::abs(x);
        x = next;
        if (done) break;
    }
    // the stopping rules can fire one step early; take Newton steps while |J| drops
    for (int iter = 0; iter < 3; ++iter) {
        const double f = bessel_j(nu, x);
        const double next = x - f / bessel_j_derivative(nu, x);
        if (!std::isfinite(next) || !(std::abs(bessel_j(nu, next)) < std::abs(f))) break;
        x = next;
    }
    const double d = bessel_j_derivative(nu, x);
    const double err = (d != 0.0 ? std::abs(bessel_j(nu, x) / d) : b - a) + eps * x;
    return {x, err};
}

inline bool sign_change(double fa, double fb) { return (fa < 0 && fb > 0) || (fa > 0 && fb < 0); }

}  // namespace detail

/// First `count` positive zeros of J_nu.
///
/// Early zeros are bracketed by scanning for sign changes with step pi/8
/// starting at max(nu, 1), which lies below the first zero. Once McMahon's
/// expansion is reliable its estimate is bracketed directly with +-0.5.
/// Every zero is polished by a safeguarded Newton iteration that uses
/// J'_nu = (nu/x) J_nu - J_{nu+1}.
inline ZeroSet bessel_zeros(double nu, std::size_t count) {
    if (!(nu >= 0.0) || !std::isfinite(nu)) throw std::domain_error("bessel_zeros: nu must be finite and >= 0");
    if (count == 0) throw std::invalid_argument("bessel_zeros: count must be >= 1");

    constexpr double pi = std::numbers::pi;
    const double step = pi / 8.0;
    const double mcmahon_from = 4.0 * std::max(1.0, 4.0 * nu * nu);

    ZeroSet out;
    out.nu = nu;
    out.zeros.reserve(count);
    out.accuracy.reserve(count);

    double scan_from = std::max(nu, 1.0);
    for (std::size_t k = 1; k <= count; ++k) {
        const double prev = out.zeros.empty() ? 0.0 : out.zeros.back();
        const double beta = pi * (static_cast<double>(k) + nu / 2.0 - 0.25);
        double a = 0, b = 0, seed = 0;
        bool bracketed = false;

        if (k > 1 && beta > mcmahon_from) {
            seed = mcmahon_zero(nu, k);
            a = seed - 0.5;
            b = seed + 0.5;
            bracketed = a > prev + 1.0 && detail::sign_change(bessel_j(nu, a), bessel_j(nu, b));
        }
        if (!bracketed) {
            a = scan_from;
            double fa = bessel_j(nu, a);
            for (int i = 0; i < 256 && !bracketed; ++i) {
                b = a + step;
                const double fb = bessel_j(nu, b);
                if (detail::sign_change(fa, fb)) {
                    bracketed = true;
                } else {
                    a = b;
                    fa = fb;
                }
            }
            seed = 0.5 * (a + b);
        }
        if (!bracketed) {
            std::ostringstream msg;
            msg << "bessel_zeros: failed to bracket zero " << k << " of J_" << nu << " (searched from "
                << scan_from << ")";
            throw numeric_error(msg.str());
        }
        auto [x, err] = detail::polish_zero(nu, a, b, seed);
        if (!(x > prev)) {
            std::ostringstream msg;
            msg << "bessel_zeros: zero " << k << " of J_" << nu << " at " << x << " not above previous zero " << prev;
            throw numeric_error(msg.str());
        }
        out.zeros.push_back(x);
        out.accuracy.push_back(err);
        scan_from = x + step;
    }
    return out;
}

struct TailedSum {
    double partial = 0.0;        ///< sum over the computed zeros
    double tail_estimate = 0.0;  ///< approximation of the neglected remainder
    double tail_bound = 0.0;     ///< upper bound on the neglected remainder
    double value = 0.0;          ///< partial + tail_estimate
};

namespace detail {

/// integral_{t}^{inf} (pi (s + shift))^{-power} ds, power > 1
inline double asymptotic_tail(double t, double shift, double power) {
    return std::pow(std::numbers::pi, -power) * std::pow(t + shift, 1.0 - power) / (power - 1.0);
}

/// Neumaier-compensated sum of f(i) for i = n-1 down to 0 (small terms first).
template <class F>
double sum_backwards(std::size_t n, F&& f) {
    double s = 0.0, c = 0.0;
    for (std::size_t i = n; i-- > 0;) {
        const double v = f(i);
        const double t = s + v;
        c += std::abs(s) >= std::abs(v) ? (s - t) + v : (v - t) + s;
        s = t;
    }
    return s + c;
}

}  // namespace detail

/// sum_k xi_k^{-2p} over the given zeros plus an integral estimate of the
/// rest, with the remainder modelled by the asymptotic zeros
/// pi (k + nu/2 - 1/4).
inline TailedSum numeric_sigma(double nu, double p, const ZeroSet& zeros) {
    if (zeros.zeros.empty()) throw std::invalid_argument("numeric_sigma: empty zero set");
    if (!(p >= 1.0)) throw std::domain_error("numeric_sigma: p must be >= 1");
    const double power = 2.0 * p;
    const std::size_t n = zeros.size();
    TailedSum s;
    s.partial = detail::sum_backwards(n, [&](std::size_t i) { return std::pow(zeros.zeros[i], -power); });
    const double shift = nu / 2.0 - 0.25;
    const auto K = static_cast<double>(n);
    s.tail_estimate = detail::asymptotic_tail(K + 0.5, shift, power);
    s.tail_bound = detail::asymptotic_tail(K, shift, power);
    s.value = s.partial + s.tail_estimate;
    return s;
}

/// J_{nu+p}(zero) / J_{nu+1}(zero)
inline double ratio_at_zero(double nu, double p, double zero) {
    const double d = bessel_j(nu + 1.0, zero);
    const double envelope = std::sqrt(2.0 / (std::numbers::pi * zero));
    if (!(std::abs(d) > 1e-10 * std::min(1.0, envelope)))
        throw numeric_error("ratio_at_zero: denominator underflow (is " + std::to_string(zero) + " a zero of J_" +
                            std::to_string(nu) + "?)");
    return bessel_j(nu + p, zero) / d;
}

struct ResidueReport {
    double lhs = 0.0;            ///< Gamma(nu+1) / (2^{p+1} Gamma(nu+p+1))
    double partial_rhs = 0.0;    ///< sum over `terms` zeros
    double residual = 0.0;       ///< |lhs - partial_rhs|
    double half_residual = 0.0;  ///< same with terms/2 zeros
    double tail_bound = 0.0;     ///< size of the neglected remainder for |ratio| <= 1
    bool converging = false;     ///< residual < half_residual
};

/// Checks Gamma(nu+1)/(2^{p+1} Gamma(nu+p+1)) = sum_k xi_k^{-(p+1)} J_{nu+p}(xi_k)/J_{nu+1}(xi_k)
/// for real p > 0 using the first `terms` zeros of `zeros`.
inline ResidueReport verify_residue_identity(double nu, double p, std::size_t terms, const ZeroSet& zeros) {
    if (terms < 2) throw std::invalid_argument("verify_residue_identity: terms must be >= 2");
    if (!(p > 0.0)) throw std::domain_error("verify_residue_identity: p must be > 0");
    if (zeros.size() < terms) throw std::invalid_argument("verify_residue_identity: not enough zeros");
    ResidueReport r;
    r.lhs = boost::math::tgamma_delta_ratio(nu + 1.0, p) / std::pow(2.0, p + 1.0);
    auto term = [&](std::size_t i) {
        const double x = zeros.zeros[i];
        return std::pow(x, -(p + 1.0)) * ratio_at_zero(nu, p, x);
    };
    r.partial_rhs = detail::sum_backwards(terms, term);
    const double half = detail::sum_backwards(terms / 2, term);
    r.residual = std::abs(r.lhs - r.partial_rhs);
    r.half_residual = std::abs(r.lhs - half);
    r.tail_bound = detail::asymptotic_tail(static_cast<double>(terms), nu / 2.0 - 0.25, p + 1.0);
    r.converging = r.residual < r.half_residual;
    return r;
}

inline ResidueReport verify_residue_identity(double nu, double p, std::size_t terms) {
    return verify_residue_identity(nu, p, terms, bessel_zeros(nu, terms));
}

/// |J_{nu+p}/J_{nu+1} - expansion| at the k-th zero of J_nu.
inline double verify_ratio_formula(double nu, long p, std::size_t k) {
    if (k == 0) throw std::invalid_argument("verify_ratio_formula: k must be >= 1");
    const double xi = bessel_zeros(nu, k).zeros.back();
    return std::abs(ratio_at_zero(nu, static_cast<double>(p), xi) - build_ratio_expansion(p).evaluate(nu, xi));
}

}  // namespace rayleigh

#endif  // RAYLEIGH_BESSEL_HPP
