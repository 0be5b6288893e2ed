#include <bcapprox/moebius.hpp>

namespace bc
{

ExtendedComplex SlotMoebius::apply(const ExtendedComplex &z) const
{
    const cplx zero{};
    if (c == zero) {
        // Affine slot; infinity is fixed. d != 0 because ad - bc = ad != 0.
        if (z.is_infinite())
            return ExtendedComplex::infinity();
        return (a * z.value() + b) / d;
    }
    if (z.is_infinite())
        return a / c;
    const cplx den = c * z.value() + d;
    if (den == zero || z.value() == -d / c)
        return ExtendedComplex::infinity();
    return (a * z.value() + b) / den;
}

MoebiusMap::MoebiusMap(const Bicomplex &a, const Bicomplex &b, const Bicomplex &c, const Bicomplex &d)
    : a_(a), b_(b), c_(c), d_(d), det_(a * d - b * c)
{
    if (in_null_cone(det_)) {
        throw DegenerateMapError("Moebius determinant AD - BC lies in the null cone");
    }
}

SlotMoebius MoebiusMap::slot(int l) const
{
    return {a_.slot(l), b_.slot(l), c_.slot(l), d_.slot(l)};
}

MoebiusMap::PolePattern MoebiusMap::pole_pattern() const
{
    const bool p1 = c_.beta1() != cplx{};
    const bool p2 = c_.beta2() != cplx{};
    if (p1 && p2)
        return PolePattern::pole_both;
    if (p1)
        return PolePattern::pole_e1;
    if (p2)
        return PolePattern::pole_e2;
    return PolePattern::affine_both;
}

ExtendedBicomplex MoebiusMap::apply(const ExtendedBicomplex &z) const
{
    return {slot(0).apply(z.c1), slot(1).apply(z.c2)};
}

MoebiusMap moebius_new(const Bicomplex &a, const Bicomplex &b, const Bicomplex &c, const Bicomplex &d)
{
    return {a, b, c, d};
}

ExtendedBicomplex moebius_apply(const MoebiusMap &m, const ExtendedBicomplex &z)
{
    return m.apply(z);
}

MoebiusMap moebius_compose(const MoebiusMap &m, const MoebiusMap &n)
{
    // [A B; C D]_m * [A B; C D]_n
    return {m.a() * n.a() + m.b() * n.c(), m.a() * n.b() + m.b() * n.d(), m.c() * n.a() + m.d() * n.c(),
            m.c() * n.b() + m.d() * n.d()};
}

MoebiusMap moebius_inverse(const MoebiusMap &m)
{
    return {m.d(), -m.b(), -m.c(), m.a()};
}

} // namespace bc
