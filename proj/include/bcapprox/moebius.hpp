#ifndef BCAPPROX_MOEBIUS_HPP
#define BCAPPROX_MOEBIUS_HPP

#include <bcapprox/bicomplex.hpp>

namespace bc
{

// Complex Moebius map (a z + b) / (c z + d) acting on the Riemann sphere.
struct SlotMoebius {
    cplx a, b, c, d;

    ExtendedComplex apply(const ExtendedComplex &z) const;
};

// Bicomplex Moebius map Z -> (A Z + B) / (C Z + D) on the extended bicomplex
// plane. Evaluation splits into one complex Moebius map per idempotent slot.
//
// Only the determinant AD - BC is required to lie outside the null cone;
// the coefficients themselves may be zero divisors (e.g. C1 = 0 != C2), so
// that all four pole patterns of the slot maps are representable.
class MoebiusMap
{
public:
    // Which slots carry a genuine pole (C_l != 0).
    enum class PolePattern { affine_both, pole_e1, pole_e2, pole_both };

    // Throws DegenerateMapError if AD - BC is in the null cone.
    MoebiusMap(const Bicomplex &a, const Bicomplex &b, const Bicomplex &c, const Bicomplex &d);

    static MoebiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }

    const Bicomplex &a() const { return a_; }
    const Bicomplex &b() const { return b_; }
    const Bicomplex &c() const { return c_; }
    const Bicomplex &d() const { return d_; }
    const Bicomplex &determinant() const { return det_; }

    SlotMoebius slot(int l) const;
    PolePattern pole_pattern() const;

    ExtendedBicomplex operator()(const ExtendedBicomplex &z) const { return apply(z); }
    ExtendedBicomplex apply(const ExtendedBicomplex &z) const;

private:
    Bicomplex a_, b_, c_, d_, det_;
};

MoebiusMap moebius_new(const Bicomplex &a, const Bicomplex &b, const Bicomplex &c, const Bicomplex &d);
ExtendedBicomplex moebius_apply(const MoebiusMap &m, const ExtendedBicomplex &z);
// (M o N)(Z) = M(N(Z)); coefficient matrices multiply slotwise.
MoebiusMap moebius_compose(const MoebiusMap &m, const MoebiusMap &n);
// Coefficients (D, -B, -C, A).
MoebiusMap moebius_inverse(const MoebiusMap &m);

} // namespace bc

#endif
