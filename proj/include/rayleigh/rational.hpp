#ifndef RAYLEIGH_RATIONAL_HPP
#define RAYLEIGH_RATIONAL_HPP

// Exact scalars for the symbolic side of the library.
//
// BigInt and Rational are arbitrary precision and always kept in lowest
// terms with a positive denominator (boost's rational_adaptor guarantees
// this after every operation). Expression templates are switched off so
// that `auto` behaves like a value type.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rayleigh {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(const BigInt& n, const BigInt& d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    return Rational(n, d);
}

inline bool is_integer(const Rational& r) { return den(r) == 1; }

inline BigInt gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return BigInt(0);
    return boost::multiprecision::lcm(a, b);
}

inline BigInt pow2(unsigned e) {
    BigInt r = 1;
    r <<= e;
    return r;
}

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Number of trailing zero bits of a nonzero integer, i.e. the 2-adic valuation.
inline unsigned two_adic_valuation(const BigInt& n) {
    if (n == 0) throw std::domain_error("valuation of zero");
    return static_cast<unsigned>(boost::multiprecision::lsb(abs(n)));
}

/// "a/b" in lowest terms, or "a" when the value is an integer.
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Parses "a", "a/b", or an exact decimal such as "-2.75" or "1.5e-3".
///
/// Decimals are converted as scaled integers, never through binary floating
/// point, so "0.1" is exactly 1/10.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
    if (text.empty()) throw fail();

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto parse_int = [&](std::string_view s) {
            std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
            if (i == s.size()) throw fail();
            for (std::size_t j = i; j < s.size(); ++j)
                if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw fail();
            std::string d(s.substr(i));
            d.erase(0, std::min(d.find_first_not_of('0'), d.size() - 1));
            BigInt v(d);
            return (s[0] == '-') ? BigInt(-v) : v;
        };
        BigInt n = parse_int(text.substr(0, slash));
        BigInt d = parse_int(text.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return Rational(n, d);
    }

    std::size_t i = 0;
    bool negative = false;
    if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
    std::string digits;
    long long scale = 0;
    bool seen_point = false, seen_digit = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            seen_digit = true;
            if (seen_point) ++scale;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit) throw fail();
    long long exponent = 0;
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E') throw fail();
        ++i;
        std::string_view e = text.substr(i);
        std::size_t k = (!e.empty() && (e[0] == '-' || e[0] == '+')) ? 1 : 0;
        if (k == e.size() || e.size() > 6) throw fail();
        for (std::size_t j = k; j < e.size(); ++j)
            if (!std::isdigit(static_cast<unsigned char>(e[j]))) throw fail();
        exponent = std::stoll(std::string(e));
    }
    // Leading zeros would make the string constructor read octal.
    digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size() - 1));
    BigInt mantissa(digits);
    if (negative) mantissa = -mantissa;
    long long shift = exponent - scale;
    BigInt ten_pow = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(shift < 0 ? -shift : shift));
    return shift >= 0 ? Rational(mantissa * ten_pow) : Rational(mantissa, ten_pow);
}

}  // namespace rayleigh

#endif  // RAYLEIGH_RATIONAL_HPP
