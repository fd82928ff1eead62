#include "oracles.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace rayleigh;

namespace {

constexpr double pi = std::numbers::pi;

// First zeros of J_0 (mpmath besseljzero, 30 digits, rounded).
constexpr double j0_zeros[] = {2.404825557695773, 5.520078110286311, 8.653727912911013};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(BesselJ, SmallArgumentAndHalfOrder) {
    EXPECT_NEAR(bessel_j(0, 1e-8), 1.0, 1e-15);
    EXPECT_NEAR(bessel_j(0, j0_zeros[0]), 0.0, 1e-12);
    for (double x : {1.0, 2.0, 5.0}) EXPECT_NEAR(bessel_j(0.5, x), std::sqrt(2.0 / (pi * x)) * std::sin(x), 1e-12);
}

TEST(BesselJ, IntegerOrderAtZeroOfJ0) {
    // mpmath, 30 digits, at the double nearest the second zero of J_0
    const double x = 5.520078110286311;
    EXPECT_LT(rel(bessel_j(6, x), 0.18913790473883965282), 1e-14);
    EXPECT_LT(rel(bessel_j(10, x), 0.0034615262380866191407), 1e-14);
    EXPECT_LT(rel(bessel_j(15, x), 1.9384409315791544158e-6), 1e-14);
}

TEST(BesselJ, DomainErrors) {
    EXPECT_THROW(bessel_j(-1.0, 1.0), std::domain_error);
    EXPECT_THROW(bessel_j(0.0, 0.0), std::domain_error);
    EXPECT_THROW(bessel_j(0.0, -2.0), std::domain_error);
    EXPECT_THROW(bessel_j(std::nan(""), 1.0), std::domain_error);
}

TEST(BesselZeros, KnownValues) {
    const ZeroSet z = bessel_zeros(0.0, 3);
    ASSERT_EQ(z.size(), 3u);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(z.zeros[k], j0_zeros[k], 1e-14);

    const ZeroSet h = bessel_zeros(0.5, 200);
    for (std::size_t k = 0; k < h.size(); ++k) EXPECT_NEAR(h.zeros[k], pi * static_cast<double>(k + 1), 1e-12);
}

TEST(BesselZeros, AgreeWithBoostZeroFinder) {
    for (double nu : {0.0, 0.3, 1.0, 2.7, 3.6, 7.25}) {
        const ZeroSet z = bessel_zeros(nu, 60);
        for (std::size_t k = 0; k < z.size(); ++k)
            EXPECT_NEAR(z.zeros[k], boost::math::cyl_bessel_j_zero(nu, static_cast<int>(k + 1)), 1e-12 * z.zeros[k])
                << "nu=" << nu << " k=" << k + 1;
    }
}

TEST(BesselZeros, CertifiedAndOrdered) {
    for (double nu : {0.0, 0.5, 1.0, 3.6}) {
        const ZeroSet z = bessel_zeros(nu, 300);
        EXPECT_GT(z.zeros.front(), 0.0);
        for (std::size_t k = 0; k < z.size(); ++k) {
            const double x = z.zeros[k];
            if (k > 0) EXPECT_GT(x, z.zeros[k - 1]);
            const double d = bessel_j_derivative(nu, x);
            EXPECT_LT(std::abs(bessel_j(nu, x)), 1e-12 * std::max(1.0, std::abs(d)));
            EXPECT_LT(z.accuracy[k], 1e-12 * x);
            // sign change across a small bracket
            const double h = 1e-9 * x;
            EXPECT_LT(bessel_j(nu, x - h) * bessel_j(nu, x + h), 0.0);
            // J'_nu = -J_{nu+1} at a zero
            EXPECT_LT(std::abs(d + bessel_j(nu + 1, x)), 1e-10);
        }
    }
}

TEST(BesselZeros, SpacingApproachesPi) {
    for (double nu : {0.0, 1.0, 3.6}) {
        const ZeroSet z = bessel_zeros(nu, 400);
        double prev_dev = 1.0;
        for (std::size_t k = 50; k + 1 < z.size(); k += 50) {
            const double dev = std::abs(z.zeros[k + 1] - z.zeros[k] - pi);
            EXPECT_LT(dev, 0.01);
            EXPECT_LE(dev, prev_dev);
            prev_dev = dev;
        }
    }
}

TEST(BesselZeros, Interlacing) {
    const ZeroSet a = bessel_zeros(0.0, 21), b = bessel_zeros(1.0, 21);
    for (std::size_t k = 0; k < 20; ++k) {
        EXPECT_LT(a.zeros[k], b.zeros[k]);
        EXPECT_LT(b.zeros[k], a.zeros[k + 1]);
    }
}

TEST(BesselZeros, Errors) {
    EXPECT_THROW(bessel_zeros(0.0, 0), std::invalid_argument);
    EXPECT_THROW(bessel_zeros(-0.5, 3), std::domain_error);
}

TEST(NumericSigma, Examples) {
    const ZeroSet z0 = bessel_zeros(0.0, 10000);
    const ZeroSet zh = bessel_zeros(0.5, 10000);
    EXPECT_NEAR(numeric_sigma(0.0, 1.0, z0).value, 0.25, 1e-10);
    EXPECT_NEAR(numeric_sigma(0.5, 1.0, zh).value, 1.0 / 6.0, 1e-10);

    SigmaTable t;
    const double exact9 = to_double(eval_sigma_exact(derive_sigma(t, 9), 0));
    EXPECT_LT(rel(numeric_sigma(0.0, 9.0, bessel_zeros(0.0, 100)).value, exact9), 1e-9);
}

TEST(NumericSigma, TailFieldsConsistent) {
    const ZeroSet z = bessel_zeros(1.0, 500);
    for (double p : {1.0, 1.5, 2.0, 4.0}) {
        const TailedSum s = numeric_sigma(1.0, p, z);
        EXPECT_GE(s.tail_bound, 0.0);
        EXPECT_GT(s.tail_estimate, 0.0);
        EXPECT_LE(s.tail_estimate, s.tail_bound);
        EXPECT_DOUBLE_EQ(s.value, s.partial + s.tail_estimate);
    }
    EXPECT_THROW(numeric_sigma(1.0, 0.5, z), std::domain_error);
    EXPECT_THROW(numeric_sigma(1.0, 1.0, ZeroSet{}), std::invalid_argument);
}

TEST(NumericSigma, TailCorrectionBeatsTruncation) {
    const ZeroSet z = bessel_zeros(0.0, 1000);
    const double err_raw = std::abs(numeric_sigma(0.0, 1.0, z).partial - 0.25);
    const double err_tail = std::abs(numeric_sigma(0.0, 1.0, z).value - 0.25);
    EXPECT_LT(err_tail, 1e-3 * err_raw);
}

TEST(NumericSigma, MatchesExactPFourAndFive) {
    SigmaTable t;
    for (const char* nu_text : {"0", "1/2", "1", "5/2"}) {
        const Rational nu = parse_rational(nu_text);
        const ZeroSet z = bessel_zeros(to_double(nu), 2000);
        for (long p : {4, 5}) {
            const double exact = to_double(eval_sigma_exact(derive_sigma(t, p), nu));
            EXPECT_LT(rel(numeric_sigma(to_double(nu), static_cast<double>(p), z).value, exact), 1e-12)
                << "p=" << p << " nu=" << nu_text;
        }
    }
}

TEST(RatioAtZero, Examples) {
    const double xi = bessel_zeros(0.0, 1).zeros[0];
    EXPECT_EQ(ratio_at_zero(0.0, 1, xi), 1.0);
    EXPECT_NEAR(ratio_at_zero(0.0, 2, xi), 0.8316611546312475, 1e-12);
    EXPECT_NEAR(ratio_at_zero(0.0, 3, xi), 8.0 / (xi * xi) - 1.0, 1e-12);
    // J_1 vanishes at its own zeros, which are not zeros of J_0
    EXPECT_THROW(ratio_at_zero(0.0, 2, bessel_zeros(1.0, 1).zeros[0]), numeric_error);
}

TEST(VerifyRatioFormula, Residuals) {
    EXPECT_LT(verify_ratio_formula(0.0, 1, 4), 1e-15);
    for (std::size_t k = 1; k <= 5; ++k) EXPECT_LT(verify_ratio_formula(0.0, 5, k), 1e-8);
    EXPECT_LT(verify_ratio_formula(1.7, 3, 3), 1e-9);
}

TEST(ResidueIdentity, IntegerP) {
    const ZeroSet z = bessel_zeros(0.0, 4000);
    const ResidueReport r1 = verify_residue_identity(0.0, 1.0, 4000, z);
    EXPECT_DOUBLE_EQ(r1.lhs, 0.25);
    EXPECT_TRUE(r1.converging);
    EXPECT_LT(r1.residual, r1.tail_bound);

    const ResidueReport r2 = verify_residue_identity(0.0, 2.0, 4000, z);
    EXPECT_DOUBLE_EQ(r2.lhs, 1.0 / 16.0);
    // sum xi^{-3} J_2/J_1 = 2 sum xi^{-4} = 2 sigma(2, 0)
    EXPECT_NEAR(r2.partial_rhs, 2.0 * numeric_sigma(0.0, 2.0, z).partial, 1e-15);
    EXPECT_LT(r2.residual, 1e-10);
}

TEST(ResidueIdentity, RealPConverges) {
    const ZeroSet z = bessel_zeros(0.25, 8000);
    double prev = 1.0;
    for (std::size_t n : {500, 1000, 2000, 4000, 8000}) {
        const ResidueReport r = verify_residue_identity(0.25, 1.5, n, z);
        EXPECT_TRUE(r.converging);
        EXPECT_LT(r.residual, prev);
        EXPECT_LT(r.residual, r.tail_bound);
        // remainder ~ n^{-p}: doubling n shrinks it by about 2^{1.5}
        EXPECT_NEAR(r.half_residual / r.residual, std::pow(2.0, 1.5), 0.05);
        prev = r.residual;
    }
    EXPECT_THROW(verify_residue_identity(0.25, 1.5, 1, z), std::invalid_argument);
    EXPECT_THROW(verify_residue_identity(0.25, 1.5, 9000, z), std::invalid_argument);
    EXPECT_THROW(verify_residue_identity(0.25, 0.0, 100, z), std::domain_error);
}
