#ifndef RAYLEIGH_POLYNOMIAL_HPP
#define RAYLEIGH_POLYNOMIAL_HPP

// Dense univariate polynomials in nu.
//
// Coefficient i multiplies nu^i. The coefficient vector never carries
// trailing zeros, so the zero polynomial is the empty vector and
// degree() == -1 for it.

#include "rayleigh/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rayleigh {

template <class T>
class Polynomial {
public:
    using value_type = T;

    Polynomial() = default;
    Polynomial(const T& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) coeffs_.push_back(c);
    }
    Polynomial(int c) : Polynomial(T(c)) {}  // NOLINT(google-explicit-constructor)
    Polynomial(std::initializer_list<T> c) : coeffs_(c) { trim(); }
    explicit Polynomial(std::vector<T> c) : coeffs_(std::move(c)) { trim(); }

    /// nu + shift
    static Polynomial shift(const T& s) { return Polynomial({s, T(1)}); }
    static Polynomial monomial(const T& c, std::size_t power) {
        std::vector<T> v(power + 1, T(0));
        v[power] = c;
        return Polynomial(std::move(v));
    }

    [[nodiscard]] const std::vector<T>& coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    /// Coefficient of nu^i; zero past the degree.
    [[nodiscard]] T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
    [[nodiscard]] T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }

    template <class U>
    [[nodiscard]] U evaluate(const U& x) const {
        U acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }
    [[nodiscard]] T operator()(const T& x) const { return evaluate<T>(x); }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) {
        *this = *this * o;
        return *this;
    }
    Polynomial& operator*=(const T& c) {
        if (c == 0) {
            coeffs_.clear();
            return *this;
        }
        for (auto& a : coeffs_) a *= c;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(out));
    }
    friend Polynomial operator*(Polynomial a, const T& c) { return a *= c; }
    friend Polynomial operator*(const T& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// Multiplies in place by (nu + s).
    void multiply_shift(const T& s) {
        if (is_zero()) return;
        coeffs_.push_back(T(0));
        for (std::size_t i = coeffs_.size() - 1; i > 0; --i) coeffs_[i] = coeffs_[i - 1] + s * coeffs_[i];
        coeffs_[0] *= s;
    }

    /// Synthetic division by (nu + s). Returns false and leaves *this untouched
    /// when the remainder is nonzero.
    bool divide_shift_exact(const T& s) {
        if (is_zero()) return true;
        if (coeffs_.size() == 1) return false;
        std::vector<T> q(coeffs_.size() - 1, T(0));
        T carry(0);
        for (std::size_t i = coeffs_.size() - 1; i > 0; --i) {
            carry = coeffs_[i] - s * carry;
            q[i - 1] = carry;
        }
        if (coeffs_[0] - s * carry != 0) return false;
        coeffs_ = std::move(q);
        return true;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using Poly = Polynomial<Rational>;
using IntPoly = Polynomial<BigInt>;

enum class PolyOp { add, sub, mul };

inline Poly poly_arith(const Poly& a, const Poly& b, PolyOp op) {
    switch (op) {
        case PolyOp::add: return a + b;
        case PolyOp::sub: return a - b;
        case PolyOp::mul: return a * b;
    }
    throw std::invalid_argument("unknown polynomial operation");
}

/// Euclidean division over the rationals: a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    const int db = b.degree();
    if (a.degree() < db) return {Poly{}, a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    const Rational lead = b.leading();
    for (int i = a.degree(); i >= db; --i) {
        const Rational c = r[static_cast<std::size_t>(i)] / lead;
        if (c == 0) continue;
        q[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

inline Poly monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading());
}

/// Monic greatest common divisor by the Euclidean algorithm over Q.
inline Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd undefined");
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

inline Poly to_rational(const IntPoly& p) {
    std::vector<Rational> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return Poly(std::move(v));
}

/// gcd of the integer coefficients (0 for the zero polynomial).
inline BigInt content(const IntPoly& p) {
    BigInt g = 0;
    for (const auto& c : p.coeffs()) {
        g = gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

/// Splits a rational polynomial as scale * primitive, where primitive has
/// integer coefficients with content 1 and positive leading coefficient.
/// The zero polynomial maps to (0, 0).
inline std::pair<Rational, IntPoly> primitive_part(const Poly& p) {
    if (p.is_zero()) return {Rational(0), IntPoly{}};
    BigInt l = 1;
    for (const auto& c : p.coeffs()) l = lcm(l, den(c));
    std::vector<BigInt> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(num(c) * (l / den(c)));
    IntPoly ip(std::move(v));
    BigInt g = content(ip);
    if (ip.leading() < 0) g = -g;
    std::vector<BigInt> w;
    w.reserve(ip.coeffs().size());
    for (const auto& c : ip.coeffs()) w.push_back(c / g);
    return {Rational(g, l), IntPoly(std::move(w))};
}

/// prod_{i=from}^{to-1} (nu + i); the constant 1 for an empty range.
template <class T>
Polynomial<T> rising_product(long from, long to) {
    Polynomial<T> r(T(1));
    for (long i = from; i < to; ++i) r.multiply_shift(T(i));
    return r;
}

}  // namespace rayleigh

#endif  // RAYLEIGH_POLYNOMIAL_HPP
