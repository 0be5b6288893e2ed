#ifndef BCAPPROX_MERGELYAN_HPP
#define BCAPPROX_MERGELYAN_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <bcapprox/bicomplex.hpp>
#include <bcapprox/expression.hpp>
#include <bcapprox/region.hpp>

namespace bc
{

inline constexpr std::uint64_t default_seed = 20220201;

using SlotFunction = std::function<cplx(cplx)>;

// Prescribed pole for a rational slot fit.
struct PoleSpec {
    cplx location;
    int max_order;
};

// Principal part sum_{m=1}^{M} coeffs[m-1] u^m with u = scale / (z - location).
struct PoleTerm {
    cplx location;
    double scale = 1.0;
    std::vector<cplx> coeffs;

    int order() const { return static_cast<int>(coeffs.size()); }
};

// Per-slot rational function
//   r(z) = sum_k poly[k] w^k + sum_j principal part of poles[j],
//   w = (z - center) / scale.
// A slot without poles is a polynomial (its only pole is at infinity).
struct SlotApproximant {
    cplx center{};
    double scale = 1.0;
    std::vector<cplx> poly;
    std::vector<PoleTerm> poles;

    cplx operator()(cplx z) const;
    bool is_polynomial() const { return poles.empty(); }
    int degree() const { return static_cast<int>(poly.size()) - 1; }
    // True if z coincides with one of the finite poles.
    bool is_pole(cplx z) const;
    // min over points of |prod_j (z - p_j)^{M_j}| relative to the pole scales,
    // i.e. min prod_j |1/u_j|^{M_j}; +inf for a polynomial slot.
    double min_denominator_modulus(const std::vector<cplx> &points) const;
};

// Product-type rational R = R1 e1 + R2 e2.
struct BicomplexRational {
    SlotApproximant r1;
    SlotApproximant r2;

    const SlotApproximant &slot(int l) const { return l == 0 ? r1 : r2; }
    // Throws NullConeError when a slot of Z sits on a pole of that slot
    // (the bicomplex denominator is then a zero divisor).
    Bicomplex operator()(const Bicomplex &z) const;

    // Bicomplex poles: finite slot poles paired across slots, with
    // infinity standing in for a polynomial slot (inf e1 + inf e2 for a
    // bicomplex polynomial).
    std::vector<ExtendedBicomplex> pole_markers() const;
};

struct FitStep {
    int degree;
    std::vector<int> pole_orders;
    double validation_error;
};

struct SlotFit {
    SlotApproximant approximant;
    double sup_error = 0.0; // max |f - r| on the validation sample
    int degree = 0;
    std::vector<int> pole_orders;
    int n_fit_boundary = 0, n_fit_interior = 0;
    int n_validation_boundary = 0, n_validation_interior = 0;
    std::vector<FitStep> trace;
    bool achieved = false;
    std::string diagnostic;
};

class DegreeExceededError : public std::runtime_error
{
public:
    DegreeExceededError(const std::string &what, SlotFit best) : std::runtime_error(what), best_(std::move(best)) {}
    const SlotFit &best() const { return best_; }

private:
    SlotFit best_;
};

class IllConditionedError : public std::runtime_error
{
public:
    IllConditionedError(const std::string &what, std::optional<SlotFit> best)
        : std::runtime_error(what), best_(std::move(best))
    {
    }
    const std::optional<SlotFit> &best() const { return best_; }

private:
    std::optional<SlotFit> best_;
};

struct FitOptions {
    int max_degree = 40;
    // Fitting sample sizes; 0 picks 4x the largest basis size (at least 128)
    // on the boundary and a quarter of that inside. Validation uses 4x both.
    int n_boundary = 0;
    std::uint64_t seed = default_seed;
    // Let fit_polynomial_slot run on regions with holes (used to exhibit
    // the failure of pole-free approximation).
    bool allow_holes = false;
};

// Least-squares polynomial fit in a degree-escalating basis: each new power
// of the scaled variable is orthogonalized against all previous basis vectors
// on the sample set. Returns the lowest degree whose validation sup error is
// below eps; otherwise throws DegreeExceededError with the best fit seen.
SlotFit fit_polynomial_slot(const SlotFunction &f, const PlanarRegion &region, double eps,
                            const FitOptions &opts = {});

// As fit_polynomial_slot with the basis extended by (scale / (z - p_j))^m,
// 1 <= m <= max_order_j, escalating degree and pole orders together.
// Throws PolePlacementError unless there is exactly one pole in each hole.
SlotFit fit_rational_slot(const SlotFunction &f, const PlanarRegion &region, const std::vector<PoleSpec> &poles,
                          double eps, const FitOptions &opts = {});

struct ApproxOptions {
    int max_degree = 40;
    // Caller-supplied poles per slot; unset slots get one pole per hole at
    // the hole's interior point, with max order max_degree.
    std::optional<std::vector<PoleSpec>> poles[2];
    bool polynomial_only = false;
    int n_boundary = 0;
    std::uint64_t seed = default_seed;
};

struct SlotReport {
    bool rational = false;
    int degree = 0;
    std::vector<PoleSpec> poles; // prescribed poles with the orders used
    int n_fit_boundary = 0, n_fit_interior = 0;
    int n_validation_boundary = 0, n_validation_interior = 0;
    std::vector<FitStep> trace;
    double sup_error = 0.0;
    bool achieved = false;
    std::string diagnostic;
};

struct ApproxReport {
    ComplementClassification classification{};
    Hyperbolic sup_error;
    double eps = 0.0;
    bool achieved = false; // sup_error strictly below (eps, eps)
    SlotReport slots[2];
    std::vector<ExtendedBicomplex> pole_markers;
    double min_denominator[2] = {0.0, 0.0};
    int max_degree = 0;
    std::uint64_t seed = default_seed;
};

struct ApproxResult {
    BicomplexRational approximant;
    ApproxReport report;
};

// Dispatch on the complement class: slots with holes get a rational fit with
// one pole per hole, slots with connected complement a polynomial fit.
// Slot failures (degree budget, conditioning) give achieved = false with
// diagnostics; malformed input throws.
ApproxResult approximate(const FunctionSpec &f, const ProductCompact &k, double eps, const ApproxOptions &opts = {});

// Componentwise max |F_l - R_l| over a validation sample of each slot region
// (n_validation boundary and n_validation / 4 interior points).
Hyperbolic sup_error_k(const FunctionSpec &f, const BicomplexRational &r, const ProductCompact &k,
                       int n_validation, std::uint64_t seed = default_seed);

// Seeds used for the fitting and validation samples of slot l.
std::uint64_t fit_seed(std::uint64_t seed, int slot);
std::uint64_t validation_seed(std::uint64_t seed, int slot);

// Throws DomainError if a declared pole of f lies in the region or f is not
// finite on a sample of it.
void validate_slot_function(const Expression &f, const PlanarRegion &region);

} // namespace bc

#endif
