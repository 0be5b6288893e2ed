#ifndef BCAPPROX_BICOMPLEX_HPP
#define BCAPPROX_BICOMPLEX_HPP

#include <complex>
#include <utility>

#include <bcapprox/errors.hpp>

namespace bc
{

using cplx = std::complex<double>;

// Bicomplex number Z = Z1 + j Z2 with Z1, Z2 in C(i), i*j = j*i = k.
//
// Stored in idempotent form Z = beta1 e1 + beta2 e2 where
//   e1 = (1 + k) / 2,  e2 = (1 - k) / 2,
//   beta1 = Z1 - i Z2, beta2 = Z1 + i Z2.
// Ring operations act independently on the two slots; the cartesian
// pair is a derived view.
class Bicomplex
{
public:
    constexpr Bicomplex() = default;
    constexpr Bicomplex(double x) : b1_(x), b2_(x) {}
    constexpr Bicomplex(cplx z) : b1_(z), b2_(z) {}

    static constexpr Bicomplex idempotent(cplx beta1, cplx beta2)
    {
        Bicomplex z;
        z.b1_ = beta1;
        z.b2_ = beta2;
        return z;
    }
    static Bicomplex cartesian(cplx z1, cplx z2);

    constexpr cplx beta1() const { return b1_; }
    constexpr cplx beta2() const { return b2_; }
    constexpr cplx slot(int l) const { return l == 0 ? b1_ : b2_; }

    cplx z1() const { return 0.5 * (b1_ + b2_); }
    cplx z2() const { return cplx(0.0, 0.5) * (b1_ - b2_); }

    constexpr bool is_zero() const { return b1_ == cplx{} && b2_ == cplx{}; }

    Bicomplex &operator+=(const Bicomplex &w)
    {
        b1_ += w.b1_;
        b2_ += w.b2_;
        return *this;
    }
    Bicomplex &operator-=(const Bicomplex &w)
    {
        b1_ -= w.b1_;
        b2_ -= w.b2_;
        return *this;
    }
    Bicomplex &operator*=(const Bicomplex &w)
    {
        b1_ *= w.b1_;
        b2_ *= w.b2_;
        return *this;
    }

    friend Bicomplex operator+(Bicomplex z, const Bicomplex &w) { return z += w; }
    friend Bicomplex operator-(Bicomplex z, const Bicomplex &w) { return z -= w; }
    friend Bicomplex operator*(Bicomplex z, const Bicomplex &w) { return z *= w; }
    friend Bicomplex operator-(const Bicomplex &z) { return idempotent(-z.b1_, -z.b2_); }
    // Throws NullConeError when w is not invertible.
    friend Bicomplex operator/(const Bicomplex &z, const Bicomplex &w);

    friend constexpr bool operator==(const Bicomplex &, const Bicomplex &) = default;

private:
    cplx b1_{};
    cplx b2_{};
};

inline constexpr Bicomplex e1 = Bicomplex::idempotent(1.0, 0.0);
inline constexpr Bicomplex e2 = Bicomplex::idempotent(0.0, 1.0);

// Imaginary units: i = i e1 + i e2, j = -i e1 + i e2 (so that i*j = k = e1 - e2).
inline constexpr Bicomplex unit_i = Bicomplex::idempotent(cplx(0, 1), cplx(0, 1));
inline constexpr Bicomplex unit_j = Bicomplex::idempotent(cplx(0, -1), cplx(0, 1));
inline constexpr Bicomplex unit_k = Bicomplex::idempotent(1.0, -1.0);

// (Z1, Z2) -> (beta1, beta2).
std::pair<cplx, cplx> idempotent_decompose(cplx z1, cplx z2);
// (beta1, beta2) -> (Z1, Z2).
std::pair<cplx, cplx> idempotent_compose(cplx beta1, cplx beta2);

Bicomplex multiply(const Bicomplex &z, const Bicomplex &w);

// tol is an absolute threshold on |beta_l|; 0 means exact zero test.
Bicomplex invert(const Bicomplex &z, double tol = 0.0);

enum class Conjugation { bar, dagger, star };

Bicomplex conjugate(const Bicomplex &z, Conjugation kind);

// Hyperbolic (D-valued) number a1 e1 + a2 e2 with real components.
struct Hyperbolic {
    double a1 = 0.0;
    double a2 = 0.0;

    constexpr Hyperbolic() = default;
    constexpr Hyperbolic(double a1_, double a2_) : a1(a1_), a2(a2_) {}

    // Real scalar x as the diagonal value x e1 + x e2.
    static constexpr Hyperbolic diagonal(double x) { return {x, x}; }

    constexpr double component(int l) const { return l == 0 ? a1 : a2; }

    friend constexpr Hyperbolic operator+(Hyperbolic h, Hyperbolic g) { return {h.a1 + g.a1, h.a2 + g.a2}; }
    friend constexpr Hyperbolic operator-(Hyperbolic h, Hyperbolic g) { return {h.a1 - g.a1, h.a2 - g.a2}; }
    friend constexpr Hyperbolic operator*(Hyperbolic h, Hyperbolic g) { return {h.a1 * g.a1, h.a2 * g.a2}; }
    friend constexpr Hyperbolic operator*(double s, Hyperbolic h) { return {s * h.a1, s * h.a2}; }
    friend constexpr bool operator==(const Hyperbolic &, const Hyperbolic &) = default;
};

// Componentwise partial order on D: h <= g iff h.a1 <= g.a1 and h.a2 <= g.a2.
constexpr bool hyp_leq(Hyperbolic h, Hyperbolic g) { return h.a1 <= g.a1 && h.a2 <= g.a2; }
// Strict componentwise order: both components strictly smaller.
constexpr bool hyp_less(Hyperbolic h, Hyperbolic g) { return h.a1 < g.a1 && h.a2 < g.a2; }
constexpr bool hyp_geq(Hyperbolic h, Hyperbolic g) { return hyp_leq(g, h); }

// |Z|_k = |beta1| e1 + |beta2| e2.
Hyperbolic norm_k(const Bicomplex &z);

// Z != 0 and min(|beta1|, |beta2|) <= tol.
bool is_zero_divisor(const Bicomplex &z, double tol = 0.0);

// Member of the null cone O_0 (zero or a zero divisor).
bool in_null_cone(const Bicomplex &z, double tol = 0.0);

// Complex value or the point at infinity of the Riemann sphere.
class ExtendedComplex
{
public:
    constexpr ExtendedComplex() = default;
    constexpr ExtendedComplex(cplx v) : value_(v) {}

    static constexpr ExtendedComplex infinity()
    {
        ExtendedComplex z;
        z.infinite_ = true;
        return z;
    }

    constexpr bool is_infinite() const { return infinite_; }
    // Only meaningful when finite.
    constexpr cplx value() const { return value_; }

    friend constexpr bool operator==(const ExtendedComplex &a, const ExtendedComplex &b)
    {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }

private:
    cplx value_{};
    bool infinite_ = false;
};

// Element of the extended bicomplex plane: BC together with the three kinds
// of infinity  inf e1 + beta e2,  beta e1 + inf e2,  inf e1 + inf e2.
struct ExtendedBicomplex {
    enum class Kind { finite, infinite_e1, infinite_e2, infinite_both };

    ExtendedComplex c1;
    ExtendedComplex c2;

    constexpr ExtendedBicomplex() = default;
    constexpr ExtendedBicomplex(ExtendedComplex s1, ExtendedComplex s2) : c1(s1), c2(s2) {}
    constexpr ExtendedBicomplex(const Bicomplex &z) : c1(z.beta1()), c2(z.beta2()) {}

    constexpr Kind kind() const
    {
        if (c1.is_infinite())
            return c2.is_infinite() ? Kind::infinite_both : Kind::infinite_e1;
        return c2.is_infinite() ? Kind::infinite_e2 : Kind::finite;
    }
    constexpr bool is_finite() const { return kind() == Kind::finite; }
    constexpr const ExtendedComplex &slot(int l) const { return l == 0 ? c1 : c2; }

    // Throws DomainError if any slot is infinite.
    Bicomplex finite_value() const;

    friend constexpr bool operator==(const ExtendedBicomplex &, const ExtendedBicomplex &) = default;
};

} // namespace bc

#endif
