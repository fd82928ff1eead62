// Derives sigma(p, nu) for p = 1..8, prints each closed form, and compares
// the zeta(2p) obtained at nu = 1/2 against a direct sum over the zeros kpi.

#include "rayleigh/rayleigh.hpp"

#include <cmath>
#include <iomanip>
#include <iostream>

int main() {
    using namespace rayleigh;
    SigmaTable table;
    const ZeroSet zeros = bessel_zeros(0.5, 2000);
    std::cout << std::setprecision(16);
    for (long p = 1; p <= 8; ++p) {
        const auto& f = derive_sigma(table, p);
        const ZetaValue z = zeta_even(p, table);
        const double numeric = numeric_sigma(0.5, static_cast<double>(p), zeros).value *
                               std::pow(std::numbers::pi, 2.0 * static_cast<double>(p));
        std::cout << "sigma(" << p << ",v) = " << to_text(f) << "\n"
                  << "  " << z.to_text() << " = " << z.to_decimal(20) << "  (zero sum: " << numeric << ")\n";
    }
}
