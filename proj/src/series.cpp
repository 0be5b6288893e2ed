#include <bcapprox/series.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <bcapprox/pade.hpp>

namespace bc
{

namespace
{

constexpr double normalization_tol = 1e-12;

bool near(const Bicomplex &z, const Bicomplex &target)
{
    const Hyperbolic d = norm_k(z - target);
    return d.a1 <= normalization_tol && d.a2 <= normalization_tol;
}

cplx horner_power(const std::vector<cplx> &c, cplx z)
{
    cplx acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

// z + b0 + b1 / z + ... with c = [1, b0, b1, ...].
cplx horner_laurent(const std::vector<cplx> &c, cplx z)
{
    const cplx w = 1.0 / z;
    cplx tail{};
    for (std::size_t k = c.size(); k-- > 2;)
        tail = (tail + c[k]) * w;
    return c[0] * z + c[1] + tail;
}

// z G'(z) for the Laurent layout: z - sum n b_n z^-n.
cplx laurent_z_derivative(const std::vector<cplx> &c, cplx z)
{
    const cplx w = 1.0 / z;
    cplx tail{};
    for (std::size_t k = c.size(); k-- > 2;) {
        const double n = static_cast<double>(k - 1);
        tail = (tail - n * c[k]) * w;
    }
    return c[0] * z + tail;
}

void require_kind(const TruncatedSeries &s, SeriesKind kind, const char *what)
{
    if (s.kind() != kind) {
        throw DomainError(std::string(what) + ": wrong series kind");
    }
}

} // namespace

TruncatedSeries::TruncatedSeries(SeriesKind kind, std::vector<Bicomplex> coeffs)
    : kind_(kind), coeffs_(std::move(coeffs)),
      order_(static_cast<int>(coeffs_.size()) - (kind == SeriesKind::power_f ? 1 : 2))
{
}

TruncatedSeries TruncatedSeries::power(std::vector<Bicomplex> coeffs)
{
    if (coeffs.size() < 2) {
        throw DomainError("power series needs at least the coefficients of Z^0 and Z^1");
    }
    if (!near(coeffs[0], 0.0) || !near(coeffs[1], 1.0)) {
        throw DomainError("power series must satisfy F(0) = 0 and F'(0) = 1");
    }
    coeffs[0] = 0.0;
    coeffs[1] = 1.0;
    return {SeriesKind::power_f, std::move(coeffs)};
}

TruncatedSeries TruncatedSeries::laurent(std::vector<Bicomplex> coeffs)
{
    if (coeffs.empty()) {
        throw DomainError("Laurent series needs its leading coefficient");
    }
    if (!near(coeffs[0], 1.0)) {
        throw DomainError("Laurent series must have leading coefficient 1");
    }
    coeffs[0] = 1.0;
    if (coeffs.size() < 2)
        coeffs.emplace_back(0.0);
    return {SeriesKind::laurent_sigma, std::move(coeffs)};
}

TruncatedSeries TruncatedSeries::identity(SeriesKind kind)
{
    if (kind == SeriesKind::power_f)
        return power({0.0, 1.0});
    return laurent({1.0, 0.0});
}

Bicomplex TruncatedSeries::coefficient(int n) const
{
    if (n < 0)
        return 0.0;
    const std::size_t idx = static_cast<std::size_t>(kind_ == SeriesKind::power_f ? n : n + 1);
    return idx < coeffs_.size() ? coeffs_[idx] : Bicomplex(0.0);
}

std::vector<cplx> TruncatedSeries::slot_coeffs(int l) const
{
    std::vector<cplx> out;
    out.reserve(coeffs_.size());
    for (const auto &c : coeffs_)
        out.push_back(c.slot(l));
    return out;
}

Bicomplex series_eval(const TruncatedSeries &s, const Bicomplex &z)
{
    if (s.kind() == SeriesKind::power_f) {
        return Bicomplex::idempotent(horner_power(s.slot_coeffs(0), z.beta1()),
                                     horner_power(s.slot_coeffs(1), z.beta2()));
    }
    if (in_null_cone(z)) {
        throw NullConeError("Laurent series evaluated on the null cone");
    }
    return Bicomplex::idempotent(horner_laurent(s.slot_coeffs(0), z.beta1()),
                                 horner_laurent(s.slot_coeffs(1), z.beta2()));
}

TruncatedSeries koebe_rotation_series(const Bicomplex &rotation, int n)
{
    const Hyperbolic nk = norm_k(rotation);
    if (std::abs(nk.a1 - 1.0) > normalization_tol || std::abs(nk.a2 - 1.0) > normalization_tol) {
        throw InvalidRotationError("Koebe rotation parameter must satisfy |B|_k = (1, 1)");
    }
    if (n < 1) {
        throw DomainError("truncation order must be at least 1");
    }
    std::vector<Bicomplex> c(static_cast<std::size_t>(n) + 1, 0.0);
    Bicomplex power = 1.0;
    const Bicomplex step = -rotation;
    for (int k = 1; k <= n; ++k) {
        c[static_cast<std::size_t>(k)] = static_cast<double>(k) * power;
        power *= step;
    }
    return TruncatedSeries::power(std::move(c));
}

TruncatedSeries sqrt_transform(const TruncatedSeries &f, int terms)
{
    require_kind(f, SeriesKind::power_f, "sqrt_transform");
    if (terms < 0)
        terms = f.order();
    terms = std::max(terms, 1);

    // F(u) / u = 1 + a1 u + a2 u^2 + ...,  a_k = A_{k+1}.
    // g(u)^2 = F(u) / u with g0 = 1, solved triangularly:
    //   2 g_k = a_k - sum_{i=1}^{k-1} g_i g_{k-i}.
    std::vector<Bicomplex> g(static_cast<std::size_t>(terms), 0.0);
    g[0] = 1.0;
    for (int k = 1; k < terms; ++k) {
        Bicomplex acc = f.coefficient(k + 1);
        for (int i = 1; i < k; ++i)
            acc -= g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(k - i)];
        g[static_cast<std::size_t>(k)] = 0.5 * acc;
    }

    std::vector<Bicomplex> c(static_cast<std::size_t>(2 * terms), 0.0);
    for (int k = 0; k < terms; ++k)
        c[static_cast<std::size_t>(2 * k + 1)] = g[static_cast<std::size_t>(k)];
    return TruncatedSeries::power(std::move(c));
}

TruncatedSeries inversion_transform(const TruncatedSeries &g, int order)
{
    require_kind(g, SeriesKind::power_f, "inversion_transform");
    const int m = g.order();
    if (order < 0)
        order = std::max(m - 2, 1);

    // G(w) = w (1 + sum_{k>=1} G_{k+1} w^k); H(Z) = Z / (1 + ...) with w = 1 / Z.
    // h = 1 / (1 + q):  h0 = 1,  h_k = -sum_{i=1}^{k} G_{i+1} h_{k-i}.
    const int count = order + 2;
    std::vector<Bicomplex> h(static_cast<std::size_t>(count), 0.0);
    h[0] = 1.0;
    for (int k = 1; k < count; ++k) {
        Bicomplex acc = 0.0;
        for (int i = 1; i <= std::min(k, m - 1); ++i)
            acc -= g.coefficient(i + 1) * h[static_cast<std::size_t>(k - i)];
        h[static_cast<std::size_t>(k)] = acc;
    }
    return TruncatedSeries::laurent(std::move(h));
}

Hyperbolic gronwall_area_sum(const TruncatedSeries &g)
{
    require_kind(g, SeriesKind::laurent_sigma, "gronwall_area_sum");
    Hyperbolic sum;
    for (int n = 1; n <= g.order(); ++n) {
        const Hyperbolic b = norm_k(g.coefficient(n));
        sum = sum + static_cast<double>(n) * (b * b);
    }
    return sum;
}

Hyperbolic area_contour_estimate(const TruncatedSeries &g, double r, int nsamples)
{
    require_kind(g, SeriesKind::laurent_sigma, "area_contour_estimate");
    if (!(r > 1.0)) {
        throw DomainError("area_contour_estimate requires r > 1");
    }
    if (nsamples < 4 * std::max(g.order(), 1)) {
        throw DomainError("area_contour_estimate requires nsamples >= 4 N");
    }
    double area[2] = {0.0, 0.0};
    for (int l = 0; l < 2; ++l) {
        const auto c = g.slot_coeffs(l);
        double acc = 0.0;
        for (int k = 0; k < nsamples; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / nsamples;
            const cplx z = std::polar(r, theta);
            const cplx gamma = horner_laurent(c, z);
            // d gamma / d theta = i z G'(z)
            const cplx dgamma = cplx(0.0, 1.0) * laurent_z_derivative(c, z);
            acc += std::imag(std::conj(gamma) * dgamma);
        }
        area[l] = 0.5 * acc * (2.0 * std::numbers::pi / nsamples);
    }
    return {area[0], area[1]};
}

Hyperbolic area_closed_form(const TruncatedSeries &g, double r)
{
    require_kind(g, SeriesKind::laurent_sigma, "area_closed_form");
    double area[2];
    for (int l = 0; l < 2; ++l) {
        double tail = 0.0;
        for (int n = 1; n <= g.order(); ++n)
            tail += n * std::norm(g.coefficient(n).slot(l)) * std::pow(r, -2.0 * n);
        area[l] = std::numbers::pi * (r * r - tail);
    }
    return {area[0], area[1]};
}

BieberbachResult bieberbach_check(const TruncatedSeries &f)
{
    require_kind(f, SeriesKind::power_f, "bieberbach_check");
    BieberbachResult res;
    res.a2 = f.coefficient(2);
    res.value = norm_k(res.a2);
    res.holds = res.value.a1 <= res.bound.a1 * (1.0 + 1e-12) && res.value.a2 <= res.bound.a2 * (1.0 + 1e-12);

    const TruncatedSeries g = sqrt_transform(f);
    const TruncatedSeries h = inversion_transform(g);
    res.b3 = g.coefficient(3);
    res.b5 = g.coefficient(5);
    res.c0 = h.coefficient(0);
    res.c1 = h.coefficient(1);
    res.c1_norm = norm_k(res.c1);
    res.h_area_sum = gronwall_area_sum(h);
    res.order_f = f.order();
    res.order_g = g.order();
    res.order_h = h.order();
    return res;
}

CoveringResult koebe_covering(const TruncatedSeries &f, double r, int nsamples, BoundaryEvaluation evaluation)
{
    require_kind(f, SeriesKind::power_f, "koebe_covering_min");
    if (!(r > 0.0 && r < 1.0)) {
        throw DomainError("koebe_covering_min requires 0 < r < 1");
    }
    if (nsamples < 1) {
        throw DomainError("koebe_covering_min requires a positive sample count");
    }
    CoveringResult res;
    res.radius = r;
    res.nsamples = nsamples;
    res.evaluation = evaluation;

    double value[2], direct[2], tail[2];
    for (int l = 0; l < 2; ++l) {
        const auto c = f.slot_coeffs(l);
        const int n = f.order();
        const int m_deg = (n + 1) / 2;
        const PadeApproximant pade = robust_pade(c, m_deg, n - m_deg);
        res.pade_type[l][0] = pade.numerator_degree();
        res.pade_type[l][1] = pade.denominator_degree();

        double best = std::numeric_limits<double>::infinity();
        double best_direct = std::numeric_limits<double>::infinity();
        for (int k = 0; k < nsamples; ++k) {
            const cplx z = std::polar(r, 2.0 * std::numbers::pi * k / nsamples);
            best_direct = std::min(best_direct, std::abs(horner_power(c, z)));
            if (evaluation == BoundaryEvaluation::pade)
                best = std::min(best, std::abs(pade(z)));
        }
        direct[l] = best_direct;
        value[l] = evaluation == BoundaryEvaluation::pade ? best : best_direct;
        tail[l] = std::abs(c.back()) * std::pow(r, n);
    }
    res.value = {value[0], value[1]};
    res.direct_min = {direct[0], direct[1]};
    res.tail = {tail[0], tail[1]};
    return res;
}

Hyperbolic koebe_covering_min(const TruncatedSeries &f, double r, int nsamples, BoundaryEvaluation evaluation)
{
    return koebe_covering(f, r, nsamples, evaluation).value;
}

} // namespace bc
