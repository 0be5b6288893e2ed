#ifndef BCAPPROX_SERIES_HPP
#define BCAPPROX_SERIES_HPP

#include <vector>

#include <bcapprox/bicomplex.hpp>

namespace bc
{

enum class SeriesKind {
    power_f,      // F(Z) = Z + A2 Z^2 + ... + AN Z^N
    laurent_sigma // G(Z) = Z + B0 + B1 / Z + ... + BN / Z^N
};

// Truncated bicomplex series for the normalized classes F and Sigma.
//
// Coefficient layout:
//   power_f:       coeffs[n] multiplies Z^n, n = 0..N; coeffs[0] = 0, coeffs[1] = 1.
//   laurent_sigma: coeffs[0] = 1 multiplies Z, coeffs[n + 1] = B_n multiplies Z^-n, n = 0..N.
class TruncatedSeries
{
public:
    // Throws DomainError unless the normalization holds to 1e-12; the
    // normalized entries are then stored exactly.
    static TruncatedSeries power(std::vector<Bicomplex> coeffs);
    static TruncatedSeries laurent(std::vector<Bicomplex> coeffs);

    static TruncatedSeries identity(SeriesKind kind = SeriesKind::power_f);

    SeriesKind kind() const { return kind_; }
    int order() const { return order_; }
    const std::vector<Bicomplex> &coeffs() const { return coeffs_; }

    // power_f: A_n (zero beyond N). laurent_sigma: B_n for n >= 0 (zero beyond N).
    Bicomplex coefficient(int n) const;

    // Coefficients of one idempotent slot, same layout as coeffs().
    std::vector<cplx> slot_coeffs(int l) const;

private:
    TruncatedSeries(SeriesKind kind, std::vector<Bicomplex> coeffs);

    SeriesKind kind_;
    std::vector<Bicomplex> coeffs_;
    int order_;
};

// Horner evaluation per idempotent slot. Laurent evaluation throws
// NullConeError when Z is in the null cone.
Bicomplex series_eval(const TruncatedSeries &s, const Bicomplex &z);

// Rotation t / (1 + B t)^2 of the Koebe function truncated at order n:
// A_k = k (-B)^(k-1). Throws InvalidRotationError unless |B|_k = (1, 1) to 1e-12.
TruncatedSeries koebe_rotation_series(const Bicomplex &rotation, int n);

// Odd series G with G(Z)^2 = F(Z^2), G(Z) = Z + B3 Z^3 + B5 Z^5 + ...
// The recurrence treats F as the exact polynomial it stores. `terms` odd
// coefficients are produced (G has order 2 terms - 1); the default F.order()
// keeps exactly the coefficients that are independent of the truncation of F.
TruncatedSeries sqrt_transform(const TruncatedSeries &f, int terms = -1);

// H(Z) = 1 / G(1/Z) = Z + C0 + C1 / Z + ... for a normalized power series G.
// Default order G.order() - 2 keeps exactly the coefficients that do not
// depend on the truncation of G (minimum 1).
TruncatedSeries inversion_transform(const TruncatedSeries &g, int order = -1);

// sum_n n |B_n|_k^2 over the stored Laurent tail.
Hyperbolic gronwall_area_sum(const TruncatedSeries &g);

// Per slot, the area enclosed by the image curve G_l(r e^{i theta}),
// integrated with the periodic trapezoid rule on (1/2) Im(conj(g) dg).
// Throws DomainError if r <= 1 or nsamples < 4 N.
Hyperbolic area_contour_estimate(const TruncatedSeries &g, double r, int nsamples);

// Closed form pi (r^2 - sum n |B_n,l|^2 r^-2n) per slot.
Hyperbolic area_closed_form(const TruncatedSeries &g, double r);

struct BieberbachResult {
    Hyperbolic value; // |A2|_k
    Hyperbolic bound{2.0, 2.0};
    bool holds = false;

    // Diagnostic trace of the square-root / inversion pipeline.
    Bicomplex a2, b3, b5, c0, c1;
    Hyperbolic c1_norm;       // |C1|_k = |A2|_k / 2
    Hyperbolic h_area_sum;    // Gronwall sum of H over its exact coefficients
    int order_f = 0, order_g = 0, order_h = 0;
};

BieberbachResult bieberbach_check(const TruncatedSeries &f);

enum class BoundaryEvaluation {
    direct, // Horner on the stored polynomial
    pade    // robust Pade resummation of the stored coefficients
};

struct CoveringResult {
    Hyperbolic value;       // per-slot minimum of |F_l| on the sampled circle
    Hyperbolic direct_min;  // same, by direct Horner evaluation
    Hyperbolic tail;        // |A_N,l| r^N, size of the last retained term
    int pade_type[2][2]{};  // (numerator, denominator) degree per slot
    double radius = 0.0;
    int nsamples = 0;
    BoundaryEvaluation evaluation = BoundaryEvaluation::pade;
};

// Per slot, min over nsamples equispaced theta of |F_l(r e^{i theta})|.
// Univalence of F is not checked. With r close to the radius of convergence
// the stored polynomial is far from the represented map (|A_N| r^N is not
// small), so the default evaluates the boundary through a robust Pade
// approximant of the coefficients. Throws DomainError unless 0 < r < 1.
CoveringResult koebe_covering(const TruncatedSeries &f, double r, int nsamples,
                              BoundaryEvaluation evaluation = BoundaryEvaluation::pade);

Hyperbolic koebe_covering_min(const TruncatedSeries &f, double r, int nsamples,
                              BoundaryEvaluation evaluation = BoundaryEvaluation::pade);

// Sharp lower bound r / (1 + r)^2 for min |F| on |z| = r over univalent
// normalized maps; tends to 1/4 as r -> 1.
constexpr double koebe_radius_bound(double r) { return r / ((1.0 + r) * (1.0 + r)); }

} // namespace bc

#endif
