#ifndef RAYLEIGH_FACTORED_HPP
#define RAYLEIGH_FACTORED_HPP

// Rational functions of nu with a factored denominator
//
//     numerator(nu) / ( 2^a * prod_m (nu+m)^{e_m} * residual(nu) )
//
// which is the shape in which every Rayleigh sum comes out. All stored
// polynomials have integer coefficients. After normalize():
//   - the numerator shares no factor with the denominator,
//   - the numerator is content * primitive with positive leading
//     coefficient for the primitive part (content is 1 whenever the
//     value allows it),
//   - shift factors are sorted by m with distinct m and e_m > 0,
//   - the residual is primitive with positive leading coefficient times
//     an odd positive constant, and contains no (nu+m) factor for the
//     shifts that were searched.

#include "rayleigh/polynomial.hpp"
#include "rayleigh/rational.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rayleigh {

struct ShiftFactor {
    long m = 0;
    unsigned e = 0;
    friend bool operator==(const ShiftFactor&, const ShiftFactor&) = default;
};

class pole_error : public std::domain_error {
public:
    explicit pole_error(Rational where)
        : std::domain_error("evaluation at pole (nu=" + to_string(where) + ")"), where_(std::move(where)) {}
    [[nodiscard]] const Rational& where() const noexcept { return where_; }

private:
    Rational where_;
};

/// Denominator parts produced by factor_shifts.
struct DenominatorFactors {
    unsigned two_exponent = 0;
    std::vector<ShiftFactor> shift_factors;
    /// Leftover factor, including the odd part and sign of the content.
    IntPoly residual;
    friend bool operator==(const DenominatorFactors&, const DenominatorFactors&) = default;
};

/// Extracts the multiplicity of each (nu+m), 1 <= m <= max_shift, and the
/// power of two in the leftover content. Whatever does not factor that way
/// stays in the residual, including any odd constant. `denominator` must have
/// integer coefficients.
inline DenominatorFactors factor_shifts(const Poly& denominator, long max_shift) {
    if (denominator.is_zero()) throw std::domain_error("factor_shifts of the zero polynomial");
    auto [scale, prim] = primitive_part(denominator);
    DenominatorFactors out;
    for (long m = 1; m <= max_shift; ++m) {
        unsigned e = 0;
        while (prim.degree() >= 1 && prim.divide_shift_exact(BigInt(m))) ++e;
        if (e > 0) out.shift_factors.push_back({m, e});
    }
    BigInt n = num(scale), d = den(scale);
    if (d != 1) throw std::domain_error("factor_shifts expects an integer-coefficient denominator");
    unsigned a = two_adic_valuation(n);
    out.two_exponent = a;
    n >>= a;
    out.residual = prim * n;
    return out;
}

inline IntPoly expand_shifts(const std::vector<ShiftFactor>& shifts) {
    IntPoly r(BigInt(1));
    for (const auto& s : shifts)
        for (unsigned i = 0; i < s.e; ++i) r.multiply_shift(BigInt(s.m));
    return r;
}

class FactoredRationalFn {
public:
    FactoredRationalFn() : numerator_(), residual_(BigInt(1)) {}

    /// Builds numerator / (2^a prod(nu+m)^e residual) and normalizes.
    FactoredRationalFn(IntPoly numerator, unsigned two_exponent, std::vector<ShiftFactor> shifts,
                       IntPoly residual = IntPoly(BigInt(1)))
        : numerator_(std::move(numerator)),
          two_exponent_(two_exponent),
          shift_factors_(std::move(shifts)),
          residual_(std::move(residual)) {
        normalize();
    }

    /// A polynomial with rational coefficients viewed as a rational function.
    static FactoredRationalFn from_poly(const Poly& p) {
        auto [scale, prim] = primitive_part(p);
        FactoredRationalFn f;
        if (p.is_zero()) return f;
        f.numerator_ = prim * num(scale);
        f.residual_ = IntPoly(den(scale));
        f.normalize();
        return f;
    }

    static FactoredRationalFn constant(const Rational& c) { return from_poly(Poly(c)); }

    [[nodiscard]] const IntPoly& numerator() const noexcept { return numerator_; }
    [[nodiscard]] unsigned two_exponent() const noexcept { return two_exponent_; }
    [[nodiscard]] const std::vector<ShiftFactor>& shift_factors() const noexcept { return shift_factors_; }
    [[nodiscard]] const IntPoly& residual() const noexcept { return residual_; }
    [[nodiscard]] bool is_zero() const noexcept { return numerator_.is_zero(); }

    [[nodiscard]] unsigned shift_exponent(long m) const {
        for (const auto& s : shift_factors_)
            if (s.m == m) return s.e;
        return 0;
    }

    [[nodiscard]] IntPoly expanded_denominator() const {
        return expand_shifts(shift_factors_) * residual_ * pow2(two_exponent_);
    }

    /// Exact value at nu; throws pole_error where the denominator vanishes.
    [[nodiscard]] Rational evaluate(const Rational& nu) const {
        Rational d = Rational(pow2(two_exponent_));
        for (const auto& s : shift_factors_) {
            Rational f = nu + s.m;
            if (f == 0) throw pole_error(nu);
            for (unsigned i = 0; i < s.e; ++i) d *= f;
        }
        Rational r = residual_.evaluate<Rational>(nu);
        if (r == 0) throw pole_error(nu);
        return numerator_.evaluate<Rational>(nu) / (d * r);
    }

    friend FactoredRationalFn operator+(const FactoredRationalFn& x, const FactoredRationalFn& y) {
        return combine(x, y, false);
    }
    friend FactoredRationalFn operator-(const FactoredRationalFn& x, const FactoredRationalFn& y) {
        return combine(x, y, true);
    }

    friend FactoredRationalFn operator*(const FactoredRationalFn& x, const FactoredRationalFn& y) {
        std::map<long, unsigned> exps;
        for (const auto& s : x.shift_factors_) exps[s.m] += s.e;
        for (const auto& s : y.shift_factors_) exps[s.m] += s.e;
        std::vector<ShiftFactor> shifts;
        for (auto [m, e] : exps) shifts.push_back({m, e});
        return FactoredRationalFn(x.numerator_ * y.numerator_, x.two_exponent_ + y.two_exponent_,
                                  std::move(shifts), x.residual_ * y.residual_);
    }

    friend FactoredRationalFn operator*(const FactoredRationalFn& x, const Poly& p) { return x * from_poly(p); }
    friend FactoredRationalFn operator*(const FactoredRationalFn& x, const Rational& c) { return x * constant(c); }

    /// Divides by prod_i (nu+m_i)^{e_i}.
    [[nodiscard]] FactoredRationalFn divide_by_shifts(const std::vector<ShiftFactor>& shifts) const {
        return *this * FactoredRationalFn(IntPoly(BigInt(1)), 0, shifts);
    }

    friend bool operator==(const FactoredRationalFn&, const FactoredRationalFn&) = default;

private:
    static FactoredRationalFn combine(const FactoredRationalFn& x, const FactoredRationalFn& y, bool subtract) {
        if (y.is_zero()) return x;
        if (x.is_zero()) return subtract ? y * Rational(-1) : y;
        // Common denominator: max power of two and of each shift, product of
        // residuals (or one copy when they coincide).
        const unsigned a = std::max(x.two_exponent_, y.two_exponent_);
        std::map<long, std::pair<unsigned, unsigned>> exps;
        for (const auto& s : x.shift_factors_) exps[s.m].first = s.e;
        for (const auto& s : y.shift_factors_) exps[s.m].second = s.e;

        IntPoly nx = x.numerator_ * pow2(a - x.two_exponent_);
        IntPoly ny = y.numerator_ * pow2(a - y.two_exponent_);
        std::vector<ShiftFactor> shifts;
        for (auto [m, e] : exps) {
            const unsigned top = std::max(e.first, e.second);
            shifts.push_back({m, top});
            for (unsigned i = e.first; i < top; ++i) nx.multiply_shift(BigInt(m));
            for (unsigned i = e.second; i < top; ++i) ny.multiply_shift(BigInt(m));
        }
        IntPoly residual = x.residual_;
        if (x.residual_ != y.residual_) {
            nx *= y.residual_;
            ny *= x.residual_;
            residual = x.residual_ * y.residual_;
        }
        return FactoredRationalFn(subtract ? nx - ny : nx + ny, a, std::move(shifts), std::move(residual));
    }

    void normalize();

    IntPoly numerator_;
    unsigned two_exponent_ = 0;
    std::vector<ShiftFactor> shift_factors_;
    IntPoly residual_;
};

inline void FactoredRationalFn::normalize() {
    if (residual_.is_zero()) throw std::domain_error("zero denominator");
    if (numerator_.is_zero()) {
        two_exponent_ = 0;
        shift_factors_.clear();
        residual_ = IntPoly(BigInt(1));
        return;
    }

    // Merge duplicate shifts and move any (nu+m) hiding in the residual
    // into the shift list.
    std::map<long, unsigned> exps;
    for (const auto& s : shift_factors_)
        if (s.e > 0) exps[s.m] += s.e;
    if (residual_.degree() >= 1) {
        for (auto& [m, e] : exps)
            while (residual_.degree() >= 1 && residual_.divide_shift_exact(BigInt(m))) ++e;
    }

    // Cancel common shift factors.
    for (auto& [m, e] : exps)
        while (e > 0 && numerator_.divide_shift_exact(BigInt(m))) --e;

    // Cancel any remaining common factor with a nonconstant residual.
    if (residual_.degree() >= 1) {
        Poly g = poly_gcd(to_rational(numerator_), to_rational(residual_));
        if (g.degree() >= 1) {
            Poly n = divmod(to_rational(numerator_), g).first;
            Poly r = divmod(to_rational(residual_), g).first;
            auto [rs, rp] = primitive_part(r);
            auto [ns, np] = primitive_part(n);
            // value = ns*np / (rs*rp) -> fold the rational ratio into constants below
            Rational k = ns / rs;
            numerator_ = np * num(k);
            residual_ = rp * den(k);
        }
    }

    // Constants: numerator = nc * N0, residual = rc * R0 with N0, R0
    // primitive, positive leading coefficient. Then the overall constant
    // nc / (2^a rc) is reduced and split into numerator content and an odd
    // residual constant times a new power of two.
    BigInt nc = content(numerator_);
    if (numerator_.leading() < 0) nc = -nc;
    BigInt rc = content(residual_);
    if (residual_.leading() < 0) rc = -rc;
    IntPoly n0 = numerator_, r0 = residual_;
    {
        std::vector<BigInt> v;
        for (const auto& c : numerator_.coeffs()) v.push_back(c / nc);
        n0 = IntPoly(std::move(v));
        std::vector<BigInt> w;
        for (const auto& c : residual_.coeffs()) w.push_back(c / rc);
        r0 = IntPoly(std::move(w));
    }
    Rational k = Rational(nc, rc * pow2(two_exponent_));
    BigInt kn = num(k), kd = den(k);
    two_exponent_ = two_adic_valuation(kd);
    kd >>= two_exponent_;
    numerator_ = n0 * kn;
    residual_ = r0 * kd;

    shift_factors_.clear();
    for (auto [m, e] : exps)
        if (e > 0) shift_factors_.push_back({m, e});
}

}  // namespace rayleigh

#endif  // RAYLEIGH_FACTORED_HPP
