#ifndef RAYLEIGH_RENDER_HPP
#define RAYLEIGH_RENDER_HPP

// Plain text, LaTeX and JSON forms of FactoredRationalFn.
//
//   text:  (21 v^3 + 181 v^2 + 513 v + 473) / (2^11 (v+1)^6 (v+2)^3 ...)
//   latex: \frac{21\nu^{3}+181\nu^{2}+513\nu+473}{2^{11}(\nu+1)^{6}(\nu+2)^{3}...}
//   json:  {"numerator": ["473","513","181","21"], "two_exponent": 11,
//           "shift_factors": [[1,6],[2,3],...], "residual": ["1"]}
//
// JSON coefficient lists are in ascending powers of nu.

#include "rayleigh/factored.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace rayleigh {

namespace detail {

struct PolyStyle {
    std::string var;
    bool latex;
};

inline std::string power_of(const PolyStyle& st, int k) {
    if (k == 0) return "";
    if (k == 1) return st.var;
    return st.latex ? st.var + "^{" + std::to_string(k) + "}" : st.var + "^" + std::to_string(k);
}

/// Descending powers, e.g. "21 v^3 + 181 v^2 - v + 473".
inline std::string render_poly(const IntPoly& p, const PolyStyle& st) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        BigInt c = p[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out += "-";
        } else if (st.latex) {
            out += negative ? "-" : "+";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string mag = (c == 1 && k > 0) ? "" : c.str();
        std::string pw = power_of(st, k);
        if (!mag.empty() && !pw.empty() && !st.latex) mag += " ";
        out += mag + pw;
    }
    return out;
}

inline std::string shift_text(long m) { return "(v+" + std::to_string(m) + ")"; }
inline std::string shift_latex(long m) { return "(\\nu+" + std::to_string(m) + ")"; }

inline std::vector<std::string> coeff_strings(const IntPoly& p) {
    std::vector<std::string> v;
    for (const auto& c : p.coeffs()) v.push_back(c.str());
    return v;
}

inline IntPoly coeffs_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("coefficient list must be an array");
    std::vector<BigInt> v;
    for (const auto& c : j) {
        if (!c.is_string()) throw std::invalid_argument("coefficients must be decimal strings");
        const auto s = c.get<std::string>();
        Rational r = parse_rational(s);
        if (!is_integer(r)) throw std::invalid_argument("non-integer coefficient '" + s + "'");
        v.push_back(num(r));
    }
    return IntPoly(std::move(v));
}

}  // namespace detail

inline std::string to_text(const FactoredRationalFn& f) {
    const detail::PolyStyle st{"v", false};
    std::string n = detail::render_poly(f.numerator(), st);
    const int terms = static_cast<int>(std::count_if(f.numerator().coeffs().begin(), f.numerator().coeffs().end(),
                                                     [](const BigInt& c) { return c != 0; }));

    std::vector<std::string> parts;
    const bool unit_residual = f.residual() == IntPoly(BigInt(1));
    if (f.residual().is_constant() && !unit_residual) parts.push_back(f.residual().leading().str());
    if (f.two_exponent() == 1) parts.emplace_back("2");
    if (f.two_exponent() > 1) parts.push_back("2^" + std::to_string(f.two_exponent()));
    for (const auto& s : f.shift_factors())
        parts.push_back(detail::shift_text(s.m) + (s.e > 1 ? "^" + std::to_string(s.e) : ""));
    if (!f.residual().is_constant()) parts.push_back("(" + detail::render_poly(f.residual(), st) + ")");

    if (parts.empty()) return n;
    if (terms > 1) n = "(" + n + ")";
    std::string d;
    for (std::size_t i = 0; i < parts.size(); ++i) d += (i ? " " : "") + parts[i];
    if (parts.size() > 1 || !f.shift_factors().empty()) d = "(" + d + ")";
    return n + " / " + d;
}

inline std::string to_latex(const FactoredRationalFn& f) {
    const detail::PolyStyle st{"\\nu", true};
    const std::string n = detail::render_poly(f.numerator(), st);
    std::string d;
    const bool unit_residual = f.residual() == IntPoly(BigInt(1));
    if (f.residual().is_constant() && !unit_residual) d += f.residual().leading().str() + "\\times ";
    if (f.two_exponent() == 1) d += "2";
    if (f.two_exponent() > 1) d += "2^{" + std::to_string(f.two_exponent()) + "}";
    for (const auto& s : f.shift_factors())
        d += detail::shift_latex(s.m) + (s.e > 1 ? "^{" + std::to_string(s.e) + "}" : "");
    if (!f.residual().is_constant()) d += "(" + detail::render_poly(f.residual(), st) + ")";
    if (d.empty()) return n;
    return "\\frac{" + n + "}{" + d + "}";
}

inline nlohmann::json to_json(const FactoredRationalFn& f) {
    nlohmann::json shifts = nlohmann::json::array();
    for (const auto& s : f.shift_factors()) shifts.push_back({s.m, s.e});
    return {{"numerator", detail::coeff_strings(f.numerator())},
            {"two_exponent", f.two_exponent()},
            {"shift_factors", shifts},
            {"residual", detail::coeff_strings(f.residual())}};
}

inline FactoredRationalFn from_json(const nlohmann::json& j) {
    std::vector<ShiftFactor> shifts;
    for (const auto& s : j.at("shift_factors")) {
        if (!s.is_array() || s.size() != 2) throw std::invalid_argument("shift factor must be [m, e]");
        shifts.push_back({s[0].get<long>(), s[1].get<unsigned>()});
    }
    return FactoredRationalFn(detail::coeffs_from_json(j.at("numerator")), j.at("two_exponent").get<unsigned>(),
                              std::move(shifts), detail::coeffs_from_json(j.at("residual")));
}

}  // namespace rayleigh

#endif  // RAYLEIGH_RENDER_HPP
