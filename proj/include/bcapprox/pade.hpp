#ifndef BCAPPROX_PADE_HPP
#define BCAPPROX_PADE_HPP

#include <span>
#include <vector>

#include <bcapprox/bicomplex.hpp>

namespace bc
{

// Complex rational function p(z) / q(z), coefficients in ascending powers.
struct PadeApproximant {
    std::vector<cplx> numerator;
    std::vector<cplx> denominator; // denominator[0] == 1

    cplx operator()(cplx z) const;
    int numerator_degree() const { return static_cast<int>(numerator.size()) - 1; }
    int denominator_degree() const { return static_cast<int>(denominator.size()) - 1; }
};

// Type (m, n) Pade approximant of the power series sum c_k z^k, computed with
// SVD-based rank detection so that spurious pole/zero pairs are removed and
// the degrees are reduced to the numerically exact type (Gonnet, Guettel,
// Trefethen). Requires coeffs.size() >= m + n + 1.
PadeApproximant robust_pade(std::span<const cplx> coeffs, int m, int n, double tol = 1e-14);

} // namespace bc

#endif
