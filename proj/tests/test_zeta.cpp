#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace rayleigh;

TEST(ZetaEven, KnownValues) {
    SigmaTable t;
    EXPECT_EQ(zeta_even(1, t).coefficient, Rational(1, 6));
    EXPECT_EQ(zeta_even(2, t).coefficient, Rational(1, 90));

    const ZetaValue z12 = zeta_even(6, t);
    EXPECT_EQ(z12.two_p, 12);
    EXPECT_EQ(z12.coefficient, Rational(691, 729 * 125 * 49 * 11 * 13));
    EXPECT_EQ(z12.factored_denominator,
              (std::vector<PrimePower>{{3, 6}, {5, 3}, {7, 2}, {11, 1}, {13, 1}}));
    EXPECT_EQ(z12.to_text(), "zeta(12) = 691 * pi^12 / (3^6 * 5^3 * 7^2 * 11 * 13)");

    const ZetaValue z14 = zeta_even(7, t);
    EXPECT_EQ(z14.coefficient, Rational(2, 729 * 25 * 7 * 11 * 13));
    EXPECT_EQ(z14.to_text(), "zeta(14) = 2 * pi^14 / (3^6 * 5^2 * 7 * 11 * 13)");

    EXPECT_EQ(zeta_even(1, t).to_text(), "zeta(2) = pi^2 / (2 * 3)");
    EXPECT_THROW(zeta_even(0, t), std::invalid_argument);
}

TEST(ZetaEven, DenominatorFactorizationMultipliesBack) {
    SigmaTable t;
    for (long p = 1; p <= 20; ++p) {
        const ZetaValue z = zeta_even(p, t);
        EXPECT_GT(z.coefficient, 0);
        BigInt prod = 1;
        for (const auto& f : z.factored_denominator) prod *= boost::multiprecision::pow(f.prime, f.exponent);
        EXPECT_EQ(prod, den(z.coefficient)) << "p=" << p;
    }
}

TEST(ZetaEven, DecreasesTowardOne) {
    SigmaTable t;
    double prev = std::numeric_limits<double>::infinity();
    for (long p = 1; p <= 10; ++p) {
        const double v = zeta_even(p, t).to_double();
        EXPECT_GT(v, 1.0);
        EXPECT_LT(v, prev);
        prev = v;
    }
    EXPECT_LT(zeta_even(20, t).to_double() - 1.0, 1e-11);
}

TEST(ZetaEven, DecimalRendering) {
    SigmaTable t;
    // pi^2/6 to 30 significant digits
    EXPECT_EQ(zeta_even(1, t).to_decimal(30), "1.64493406684822643647241516665");
}

TEST(ZetaEven, MatchesNumericZeroSums) {
    SigmaTable t;
    const ZeroSet z = bessel_zeros(0.5, 10000);
    for (long p = 1; p <= 5; ++p) {
        const double exact = zeta_even(p, t).to_double();
        const double numeric = numeric_sigma(0.5, static_cast<double>(p), z).value *
                               std::pow(std::numbers::pi, 2.0 * static_cast<double>(p));
        EXPECT_LT(std::abs(numeric - exact) / exact, 1e-10) << "p=" << p;
    }
}

TEST(SphericalSigma, Examples) {
    SigmaTable t;
    EXPECT_EQ(spherical_sigma(1, 0, t), Rational(1, 6));
    EXPECT_EQ(spherical_sigma(2, 0, t), Rational(1, 90));
    EXPECT_EQ(spherical_sigma(1, Rational(1, 2), t), Rational(1, 8));
    EXPECT_THROW(spherical_sigma(1, Rational(-3, 2), t), pole_error);
}

TEST(SphericalSigma, MatchesZerosOfSphericalBessel) {
    // zeros of j_1 are those of J_{3/2}
    SigmaTable t;
    const ZeroSet z = bessel_zeros(1.5, 5000);
    for (long p = 1; p <= 3; ++p) {
        const double exact = to_double(spherical_sigma(p, 1, t));
        EXPECT_LT(std::abs(numeric_sigma(1.5, static_cast<double>(p), z).value - exact) / exact, 1e-10);
    }
}

TEST(FactorInteger, LargeCofactorLeftUnfactored) {
    const BigInt big_prime("1000000007");
    const auto f = factor_integer(BigInt(12) * big_prime, 1000);
    EXPECT_EQ(f, (std::vector<PrimePower>{{2, 2}, {3, 1}, {big_prime, 1}}));
}
