#include <bcapprox/bicomplex.hpp>

#include <algorithm>
#include <cmath>

namespace bc
{

namespace
{

constexpr cplx I{0.0, 1.0};

}

std::pair<cplx, cplx> idempotent_decompose(cplx z1, cplx z2)
{
    return {z1 - I * z2, z1 + I * z2};
}

std::pair<cplx, cplx> idempotent_compose(cplx beta1, cplx beta2)
{
    return {0.5 * (beta1 + beta2), 0.5 * I * (beta1 - beta2)};
}

Bicomplex Bicomplex::cartesian(cplx z1, cplx z2)
{
    const auto [b1, b2] = idempotent_decompose(z1, z2);
    return idempotent(b1, b2);
}

Bicomplex multiply(const Bicomplex &z, const Bicomplex &w)
{
    return z * w;
}

Bicomplex invert(const Bicomplex &z, double tol)
{
    if (std::abs(z.beta1()) <= tol || std::abs(z.beta2()) <= tol) {
        throw NullConeError(z.is_zero() ? "cannot invert zero" : "cannot invert a zero divisor");
    }
    return Bicomplex::idempotent(1.0 / z.beta1(), 1.0 / z.beta2());
}

Bicomplex operator/(const Bicomplex &z, const Bicomplex &w)
{
    return z * invert(w);
}

Bicomplex conjugate(const Bicomplex &z, Conjugation kind)
{
    switch (kind) {
    case Conjugation::bar:
        // conj(Z1) + j conj(Z2)
        return Bicomplex::idempotent(std::conj(z.beta2()), std::conj(z.beta1()));
    case Conjugation::dagger:
        // Z1 - j Z2
        return Bicomplex::idempotent(z.beta2(), z.beta1());
    case Conjugation::star:
        // conj(Z1) - j conj(Z2)
        return Bicomplex::idempotent(std::conj(z.beta1()), std::conj(z.beta2()));
    }
    return z;
}

Hyperbolic norm_k(const Bicomplex &z)
{
    return {std::abs(z.beta1()), std::abs(z.beta2())};
}

bool is_zero_divisor(const Bicomplex &z, double tol)
{
    return !z.is_zero() && std::min(std::abs(z.beta1()), std::abs(z.beta2())) <= tol;
}

bool in_null_cone(const Bicomplex &z, double tol)
{
    return std::min(std::abs(z.beta1()), std::abs(z.beta2())) <= tol;
}

Bicomplex ExtendedBicomplex::finite_value() const
{
    if (!is_finite()) {
        throw DomainError("extended bicomplex value has an infinite slot");
    }
    return Bicomplex::idempotent(c1.value(), c2.value());
}

} // namespace bc
