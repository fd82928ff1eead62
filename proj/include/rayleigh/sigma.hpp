#ifndef RAYLEIGH_SIGMA_HPP
#define RAYLEIGH_SIGMA_HPP

// Exact Rayleigh sums sigma(p, nu) = sum_k xi_{nu,k}^{-2p} as rational
// functions of nu.
//
// Inserting the ratio expansion into the residue identity gives, for every
// integer p >= 1, one linear relation between sigma(p), sigma(p-1), ...,
// sigma(p-qmax):
//
//   1 / (2^p (nu+1)...(nu+p))
//       = sum_{q=0}^{qmax} (-1)^q 2^{p-2q} C(p-1-q,q) (nu+q+1)...(nu+p-q-1) sigma(p-q).
//
// The q = 0 coefficient is 2^p (nu+1)...(nu+p-1), so the system is
// triangular and each sigma(p) follows from the earlier ones:
//
//   sigma(p) = [ 1/(2^{2p} (nu+1)...(nu+p))
//                - sum_{q>=1} (-1)^q 2^{-2q} C(p-1-q,q) (nu+q+1)...(nu+p-q-1) sigma(p-q) ]
//              / ((nu+1)...(nu+p-1))

#include "rayleigh/factored.hpp"
#include "rayleigh/ratio_expansion.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace rayleigh {

/// prod_{i=1}^{n} (nu+i) as shift factors.
inline std::vector<ShiftFactor> shift_range(long n) {
    std::vector<ShiftFactor> s;
    for (long i = 1; i <= n; ++i) s.push_back({i, 1});
    return s;
}

/// Memo of derived sums with contiguous keys 1..max_p().
///
/// Single writer: derive_sigma extends it. Entries never change once added.
class SigmaTable {
public:
    [[nodiscard]] long max_p() const noexcept { return static_cast<long>(entries_.size()); }
    [[nodiscard]] bool contains(long p) const noexcept { return p >= 1 && p <= max_p(); }
    [[nodiscard]] const FactoredRationalFn& at(long p) const {
        if (!contains(p)) throw std::out_of_range("sigma(" + std::to_string(p) + ") not in table");
        return entries_[static_cast<std::size_t>(p - 1)];
    }
    [[nodiscard]] const std::vector<FactoredRationalFn>& entries() const noexcept { return entries_; }

    /// Appends sigma(max_p()+1). Callers are responsible for its correctness.
    void push_back(FactoredRationalFn f) { entries_.push_back(std::move(f)); }

private:
    std::vector<FactoredRationalFn> entries_;
};

namespace detail {

/// One step of the triangular solve; requires table entries 1..p-1.
inline FactoredRationalFn solve_next(const SigmaTable& table, long p) {
    // 1/(2^{2p} (nu+1)...(nu+p))
    FactoredRationalFn rhs(IntPoly(BigInt(1)), static_cast<unsigned>(2 * p), shift_range(p));
    for (long q = 1; q <= ratio_max_q(p); ++q) {
        Rational c(ratio_binomial(p, q), pow2(static_cast<unsigned>(2 * q)));
        if (q % 2 == 1) c = -c;
        rhs = rhs - table.at(p - q) * (gamma_ratio_poly(p - q, q + 1) * c);
    }
    return rhs.divide_by_shifts(shift_range(p - 1));
}

}  // namespace detail

/// Returns sigma(p, nu), extending the table through p as needed.
inline const FactoredRationalFn& derive_sigma(SigmaTable& table, long p) {
    if (p < 1) throw std::invalid_argument("derive_sigma: p must be >= 1, got " + std::to_string(p));
    while (table.max_p() < p) table.push_back(detail::solve_next(table, table.max_p() + 1));
    return table.at(p);
}

inline Rational eval_sigma_exact(const FactoredRationalFn& f, const Rational& nu) { return f.evaluate(nu); }

/// LHS minus RHS of the linear relation for index p, using the table for
/// every sigma involved (the unsolved arrangement with 2^{p-2q} weights).
/// Zero exactly when the table satisfies the relation.
inline FactoredRationalFn linear_relation_defect(const SigmaTable& table, long p) {
    if (!table.contains(p)) throw std::out_of_range("linear_relation_defect: table too short");
    FactoredRationalFn lhs(IntPoly(BigInt(1)), static_cast<unsigned>(p), shift_range(p));
    FactoredRationalFn rhs;
    for (long q = 0; q <= ratio_max_q(p); ++q) {
        const Poly coeff = ratio_coefficient(p, q) * Rational(pow2(static_cast<unsigned>(p - 2 * q)));
        rhs = rhs + table.at(p - q) * coeff;
    }
    return lhs - rhs;
}

}  // namespace rayleigh

#endif  // RAYLEIGH_SIGMA_HPP
