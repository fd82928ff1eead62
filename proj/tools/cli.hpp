#ifndef RAYLEIGH_TOOLS_CLI_HPP
#define RAYLEIGH_TOOLS_CLI_HPP

// Command-line front end. Kept as a header so the integration tests can
// drive it in-process with their own streams.
//
// Exit codes: 0 success/pass, 1 verification failed, 2 usage error,
// 3 pole, 4 numeric breakdown.

#include "rayleigh/rayleigh.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace rayleigh::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage = 2, pole = 3, numeric_breakdown = 4 };

namespace detail {

struct Options {
    long p = 0;
    std::string p_text;
    std::string format = "text";
    std::string cache;
    std::string nu = "0";
    bool exact = false;
    std::string kind;
    std::size_t terms = 10000;
    double tol = -1.0;
    std::size_t k = 1;
    std::size_t count = 10;
    int digits = 16;
    long pmax = 0;
};

inline std::string pole_message(const Rational& where) { return "pole at nu=" + to_string(where); }

inline int derive(const Options& o, std::ostream& out, std::ostream& err) {
    SigmaTable table;
    const std::filesystem::path cache(o.cache);
    if (!o.cache.empty() && std::filesystem::exists(cache)) {
        try {
            table = load_cache(cache);
        } catch (const cache_error& e) {
            err << "warning: ignoring cache: " << e.what() << "\n";
            table = SigmaTable{};
        }
    }
    const FactoredRationalFn& f = derive_sigma(table, o.p);
    if (o.format == "json") {
        nlohmann::json j = {{"p", o.p}};
        j.update(to_json(f));
        out << j.dump() << "\n";
    } else if (o.format == "latex") {
        out << to_latex(f) << "\n";
    } else {
        out << to_text(f) << "\n";
    }
    if (!o.cache.empty()) save_cache(cache, table);
    return ok;
}

inline int eval(const Options& o, std::ostream& out, std::ostream& err) {
    Rational nu;
    try {
        nu = parse_rational(o.nu);
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return usage;
    }
    SigmaTable table;
    try {
        const Rational v = eval_sigma_exact(derive_sigma(table, o.p), nu);
        if (o.exact) {
            out << to_string(v) << "\n";
        } else {
            out << std::setprecision(17) << to_double(v) << "\n";
        }
    } catch (const pole_error& e) {
        err << pole_message(e.where()) << "\n";
        return pole;
    }
    return ok;
}

inline int verify(const Options& o, std::ostream& out, std::ostream& err) {
    out << std::setprecision(17);
    double nu_d = 0.0;
    Rational nu;
    double p_real = 0.0;
    try {
        nu = parse_rational(o.nu);
        nu_d = to_double(nu);
        p_real = to_double(parse_rational(o.p_text));
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return usage;
    }
    if (nu_d < 0) {
        err << "verify: --nu must be >= 0\n";
        return usage;
    }

    bool pass = false;
    if (o.kind == "sigma") {
        if (p_real < 1 || p_real != std::floor(p_real)) {
            err << "verify sigma: --p must be an integer >= 1\n";
            return usage;
        }
        const auto p = static_cast<long>(p_real);
        const double tol = o.tol < 0 ? 1e-10 : o.tol;
        SigmaTable table;
        const double exact = to_double(eval_sigma_exact(derive_sigma(table, p), nu));
        const TailedSum s = numeric_sigma(nu_d, p_real, bessel_zeros(nu_d, o.terms));
        const double rel = std::abs(s.value - exact) / std::abs(exact);
        out << "lhs (exact)       = " << exact << "\n"
            << "rhs (numeric)     = " << s.value << "\n"
            << "partial sum       = " << s.partial << "\n"
            << "tail estimate     = " << s.tail_estimate << "\n"
            << "tail bound        = " << s.tail_bound << "\n"
            << "relative residual = " << rel << "\n";
        pass = rel <= tol;
    } else if (o.kind == "residues") {
        if (!(p_real > 0)) {
            err << "verify residues: --p must be > 0\n";
            return usage;
        }
        const double tol = o.tol < 0 ? 1e-10 : o.tol;
        const ResidueReport r = verify_residue_identity(nu_d, p_real, o.terms);
        out << "lhs               = " << r.lhs << "\n"
            << "rhs (partial)     = " << r.partial_rhs << "\n"
            << "residual          = " << r.residual << "\n"
            << "residual (half)   = " << r.half_residual << "\n"
            << "tail bound        = " << r.tail_bound << "\n"
            << "converging        = " << (r.converging ? "yes" : "no") << "\n";
        pass = r.residual <= tol || (r.converging && r.residual <= r.tail_bound);
    } else {
        if (p_real < 1 || p_real != std::floor(p_real)) {
            err << "verify ratio: --p must be an integer >= 1\n";
            return usage;
        }
        const double tol = o.tol < 0 ? 1e-8 : o.tol;
        const double xi = bessel_zeros(nu_d, o.k).zeros.back();
        const auto p = static_cast<long>(p_real);
        const double direct = ratio_at_zero(nu_d, p_real, xi);
        const double expansion = build_ratio_expansion(p).evaluate(nu_d, xi);
        const double residual = std::abs(direct - expansion);
        out << "zero              = " << xi << "\n"
            << "lhs (J ratio)     = " << direct << "\n"
            << "rhs (expansion)   = " << expansion << "\n"
            << "residual          = " << residual << "\n";
        pass = residual <= tol;
    }
    out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? ok : verification_failed;
}

inline int zeta(const Options& o, std::ostream& out) {
    SigmaTable table;
    out << zeta_even(o.p, table).to_text() << "\n";
    return ok;
}

inline int zeros(const Options& o, std::ostream& out, std::ostream& err) {
    double nu = 0;
    try {
        nu = to_double(parse_rational(o.nu));
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return usage;
    }
    if (nu < 0) {
        err << "zeros: --nu must be >= 0\n";
        return usage;
    }
    const ZeroSet z = bessel_zeros(nu, o.count);
    out << std::setprecision(o.digits);
    for (double x : z.zeros) out << x << "\n";
    return ok;
}

inline int table(const Options& o, std::ostream& out) {
    SigmaTable table;
    derive_sigma(table, o.pmax);
    if (o.format == "json") {
        out << serialize_table(table);
        return ok;
    }
    for (long p = 1; p <= table.max_p(); ++p) {
        if (o.format == "latex")
            out << "\\sigma(" << p << ",\\nu) = " << to_latex(table.at(p)) << "\n";
        else
            out << "sigma(" << p << ",v) = " << to_text(table.at(p)) << "\n";
    }
    return ok;
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Rayleigh sums of inverse powers of Bessel zeros", "rayleigh"};
    app.require_subcommand(1);
    detail::Options o;
    const std::vector<std::string> formats{"text", "json", "latex"};

    auto* derive = app.add_subcommand("derive", "Derive sigma(p, nu) as a closed form");
    derive->add_option("--p", o.p, "Power index p >= 1")->required()->check(CLI::PositiveNumber);
    derive->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    derive->add_option("--cache", o.cache, "JSON cache file of derived sums");

    auto* eval = app.add_subcommand("eval", "Evaluate sigma(p, nu)");
    eval->add_option("--p", o.p, "Power index p >= 1")->required()->check(CLI::PositiveNumber);
    eval->add_option("--nu", o.nu, "nu as a/b or an exact decimal")->required();
    eval->add_flag("--exact", o.exact, "Print the exact fraction");

    auto* verify = app.add_subcommand("verify", "Check an identity numerically");
    verify->add_option("kind", o.kind, "residues | ratio | sigma")
        ->required()
        ->check(CLI::IsMember({"residues", "ratio", "sigma"}));
    verify->add_option("--p", o.p_text, "p (real for residues)")->required();
    verify->add_option("--nu", o.nu, "nu >= 0");
    verify->add_option("--terms", o.terms, "Number of zeros summed")->check(CLI::Range(2, 10'000'000));
    verify->add_option("--tol", o.tol, "Tolerance (default 1e-10, ratio 1e-8)");
    verify->add_option("--k", o.k, "Zero index for the ratio check")->check(CLI::PositiveNumber);

    auto* zeta = app.add_subcommand("zeta", "zeta(2p) as a rational multiple of pi^{2p}");
    zeta->add_option("--p", o.p, "p >= 1")->required()->check(CLI::PositiveNumber);

    auto* zeros = app.add_subcommand("zeros", "List positive zeros of J_nu");
    zeros->add_option("--nu", o.nu, "nu >= 0")->required();
    zeros->add_option("--count", o.count, "How many zeros")->check(CLI::PositiveNumber);
    zeros->add_option("--digits", o.digits, "Significant digits")->check(CLI::Range(1, 17));

    auto* table = app.add_subcommand("table", "Closed forms for p = 1..pmax");
    table->add_option("--pmax", o.pmax, "Largest p")->required()->check(CLI::PositiveNumber);
    table->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }

    try {
        if (*derive) return detail::derive(o, out, err);
        if (*eval) return detail::eval(o, out, err);
        if (*verify) return detail::verify(o, out, err);
        if (*zeta) return detail::zeta(o, out);
        if (*zeros) return detail::zeros(o, out, err);
        if (*table) return detail::table(o, out);
    } catch (const pole_error& e) {
        err << detail::pole_message(e.where()) << "\n";
        return pole;
    } catch (const numeric_error& e) {
        err << "numeric breakdown: " << e.what() << "\n";
        return numeric_breakdown;
    } catch (const boost::math::evaluation_error& e) {
        err << "numeric breakdown: " << e.what() << "\n";
        return numeric_breakdown;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return numeric_breakdown;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}

}  // namespace rayleigh::cli

#endif  // RAYLEIGH_TOOLS_CLI_HPP
