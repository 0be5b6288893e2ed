#include <bcapprox/mergelyan.hpp>

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <set>

namespace bc
{

namespace
{

constexpr double collapse_ratio = 1e-13;
constexpr int default_boundary_samples = 256;

std::uint64_t mix(std::uint64_t z)
{
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

cplx horner(const std::vector<cplx> &c, cplx x)
{
    cplx acc{};
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

using Column = std::vector<cplx>;

cplx dot(const Column &a, const Column &b)
{
    cplx s{};
    for (std::size_t i = 0; i < a.size(); ++i)
        s += std::conj(a[i]) * b[i];
    return s;
}

double norm(const Column &a)
{
    double s = 0.0;
    for (const auto &x : a)
        s += std::norm(x);
    return std::sqrt(s);
}

// Raw basis function: family -1 is the polynomial variable w, family j >= 0
// the variable u_j of pole j.
struct BasisFunction {
    int family;
    int power;
};

// Columns of the raw basis on a fixed point set, orthonormalized one at a
// time by classical Gram-Schmidt with reorthogonalization. R relates the raw
// columns to the orthonormal ones (A = Q R).
class OrthogonalBasis
{
public:
    // Returns false if the new column is numerically in the span of the
    // previous ones.
    bool add(const Column &raw)
    {
        Column v = raw;
        std::vector<cplx> rcol(q_.size() + 1, cplx{});
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t i = 0; i < q_.size(); ++i) {
                const cplx h = dot(q_[i], v);
                rcol[i] += h;
                for (std::size_t p = 0; p < v.size(); ++p)
                    v[p] -= h * q_[i][p];
            }
        }
        const double nv = norm(v), nraw = norm(raw);
        if (!(nv > collapse_ratio * nraw) || nraw == 0.0)
            return false;
        for (auto &x : v)
            x /= nv;
        rcol.back() = nv;
        q_.push_back(std::move(v));
        r_.push_back(std::move(rcol));
        return true;
    }

    std::size_t size() const { return q_.size(); }

    // Least-squares coefficients in the raw basis: x = R^-1 Q^H f.
    std::vector<cplx> solve(const Column &f) const
    {
        const std::size_t n = q_.size();
        std::vector<cplx> y(n);
        for (std::size_t i = 0; i < n; ++i)
            y[i] = dot(q_[i], f);
        std::vector<cplx> x(n);
        for (std::size_t i = n; i-- > 0;) {
            cplx s = y[i];
            for (std::size_t j = i + 1; j < n; ++j)
                s -= r_[j][i] * x[j];
            x[i] = s / r_[i][i];
        }
        return x;
    }

private:
    std::vector<Column> q_;
    std::vector<std::vector<cplx>> r_; // r_[k] is column k of R
};

struct FitContext {
    cplx center;
    double scale;
    std::vector<PoleSpec> poles;
    std::vector<double> pole_scales;
};

cplx basis_value(const FitContext &ctx, const BasisFunction &b, cplx z)
{
    const cplx x = b.family < 0 ? (z - ctx.center) / ctx.scale
                                : ctx.pole_scales[static_cast<std::size_t>(b.family)] /
                                      (z - ctx.poles[static_cast<std::size_t>(b.family)].location);
    cplx acc = 1.0;
    for (int k = 0; k < b.power; ++k)
        acc *= x;
    return acc;
}

Column basis_column(const FitContext &ctx, const BasisFunction &b, const std::vector<cplx> &pts)
{
    Column c(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        c[i] = basis_value(ctx, b, pts[i]);
    return c;
}

SlotApproximant assemble(const FitContext &ctx, const std::vector<BasisFunction> &basis,
                         const std::vector<cplx> &coeffs)
{
    SlotApproximant r;
    r.center = ctx.center;
    r.scale = ctx.scale;
    for (std::size_t j = 0; j < ctx.poles.size(); ++j)
        r.poles.push_back({ctx.poles[j].location, ctx.pole_scales[j], {}});
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto &b = basis[k];
        std::vector<cplx> &target = b.family < 0 ? r.poly : r.poles[static_cast<std::size_t>(b.family)].coeffs;
        const std::size_t idx = static_cast<std::size_t>(b.family < 0 ? b.power : b.power - 1);
        if (target.size() <= idx)
            target.resize(idx + 1, cplx{});
        target[idx] = coeffs[k];
    }
    if (r.poly.empty())
        r.poly.push_back(cplx{});
    return r;
}

double max_error(const SlotFunction &f, const SlotApproximant &r, const std::vector<cplx> &pts)
{
    double e = 0.0;
    for (const auto &z : pts) {
        const double d = std::abs(f(z) - r(z));
        if (!(d <= e)) // also propagates NaN
            e = std::isnan(d) ? std::numeric_limits<double>::infinity() : d;
    }
    return e;
}

Column function_column(const SlotFunction &f, const std::vector<cplx> &pts)
{
    Column c(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        c[i] = f(pts[i]);
        if (!std::isfinite(c[i].real()) || !std::isfinite(c[i].imag())) {
            throw DomainError("function is not finite on the region sample");
        }
    }
    return c;
}

void validate_poles(const PlanarRegion &region, const std::vector<PoleSpec> &poles)
{
    std::set<int> seen;
    for (const auto &p : poles) {
        const int comp = region.complement_component(p.location);
        if (comp < 0)
            throw PolePlacementError("prescribed pole lies in the region");
        if (comp == 0)
            throw PolePlacementError("prescribed pole lies in the unbounded complement component");
        if (!seen.insert(comp).second)
            throw PolePlacementError("two prescribed poles share a bounded complement component");
        if (p.max_order < 1)
            throw DomainError("pole order must be at least 1");
    }
    if (static_cast<int>(poles.size()) != region.hole_count())
        throw PolePlacementError("need exactly one prescribed pole per bounded complement component");
}

// Shared degree-escalation loop for polynomial (no poles) and rational fits.
SlotFit escalate(const SlotFunction &f, const PlanarRegion &region, const std::vector<PoleSpec> &poles,
                 double eps, const FitOptions &opts)
{
    if (!(eps > 0.0))
        throw DomainError("eps must be positive");
    if (opts.max_degree < 0)
        throw DomainError("max_degree must be non-negative");

    int max_steps = opts.max_degree;
    int basis_max = opts.max_degree + 1;
    for (const auto &p : poles) {
        max_steps = std::max(max_steps, p.max_order);
        basis_max += p.max_order;
    }
    const int n_b = opts.n_boundary > 0 ? opts.n_boundary : std::max(default_boundary_samples, 4 * basis_max);
    const int n_i = n_b / 4;

    const RegionSample fit = sample_region(region, n_b, n_i, opts.seed);
    const RegionSample val = sample_region(region, 4 * n_b, 4 * n_i, mix(opts.seed));
    const std::vector<cplx> fit_pts = fit.all();
    const std::vector<cplx> val_pts = val.all();

    FitContext ctx{region.reference_center(), region.reference_radius(), poles, {}};
    for (const auto &p : poles) {
        double s = std::numeric_limits<double>::infinity();
        for (const auto &z : fit_pts)
            s = std::min(s, std::abs(z - p.location));
        ctx.pole_scales.push_back(s);
    }

    const Column rhs = function_column(f, fit_pts);
    function_column(f, val_pts);

    SlotFit best;
    best.sup_error = std::numeric_limits<double>::infinity();
    std::vector<FitStep> trace;
    std::vector<BasisFunction> basis;
    OrthogonalBasis q;
    int degree = -1;
    std::vector<int> orders(poles.size(), 0);
    bool have_best = false;

    auto fill_counts = [&](SlotFit &s) {
        s.n_fit_boundary = static_cast<int>(fit.boundary.size());
        s.n_fit_interior = static_cast<int>(fit.interior.size());
        s.n_validation_boundary = static_cast<int>(val.boundary.size());
        s.n_validation_interior = static_cast<int>(val.interior.size());
    };

    for (int k = 0; k <= max_steps; ++k) {
        std::vector<BasisFunction> added;
        if (k <= opts.max_degree)
            added.push_back({-1, k});
        if (k > 0)
            for (std::size_t j = 0; j < poles.size(); ++j)
                if (k <= poles[j].max_order)
                    added.push_back({static_cast<int>(j), k});
        for (const auto &b : added) {
            if (!q.add(basis_column(ctx, b, fit_pts))) {
                best.trace = trace;
                fill_counts(best);
                throw IllConditionedError("orthogonalization collapsed at step " + std::to_string(k),
                                          have_best ? std::optional<SlotFit>(best) : std::nullopt);
            }
            basis.push_back(b);
            if (b.family < 0)
                degree = b.power;
            else
                orders[static_cast<std::size_t>(b.family)] = b.power;
        }

        const SlotApproximant r = assemble(ctx, basis, q.solve(rhs));
        const double err = max_error(f, r, val_pts);
        trace.push_back({degree, orders, err});
        if (err < best.sup_error || !have_best) {
            have_best = true;
            best.approximant = r;
            best.sup_error = err;
            best.degree = degree;
            best.pole_orders = orders;
        }
        if (err < eps)
            break;
    }

    best.trace = std::move(trace);
    fill_counts(best);
    best.achieved = best.sup_error < eps;
    if (!best.achieved) {
        best.diagnostic = "validation error above eps after exhausting the degree budget";
        throw DegreeExceededError(best.diagnostic, best);
    }
    return best;
}

} // namespace

cplx SlotApproximant::operator()(cplx z) const
{
    cplx acc = horner(poly, (z - center) / scale);
    for (const auto &p : poles) {
        const cplx u = p.scale / (z - p.location);
        acc += u * horner(p.coeffs, u);
    }
    return acc;
}

bool SlotApproximant::is_pole(cplx z) const
{
    return std::any_of(poles.begin(), poles.end(), [&](const PoleTerm &p) { return p.location == z; });
}

double SlotApproximant::min_denominator_modulus(const std::vector<cplx> &points) const
{
    if (poles.empty())
        return std::numeric_limits<double>::infinity();
    double m = std::numeric_limits<double>::infinity();
    for (const auto &z : points) {
        double prod = 1.0;
        for (const auto &p : poles)
            prod *= std::pow(std::abs(z - p.location) / p.scale, p.order());
        m = std::min(m, prod);
    }
    return m;
}

Bicomplex BicomplexRational::operator()(const Bicomplex &z) const
{
    if (r1.is_pole(z.beta1()) || r2.is_pole(z.beta2())) {
        throw NullConeError("rational denominator is a zero divisor at this point");
    }
    return Bicomplex::idempotent(r1(z.beta1()), r2(z.beta2()));
}

std::vector<ExtendedBicomplex> BicomplexRational::pole_markers() const
{
    auto slot_poles = [](const SlotApproximant &s) {
        std::vector<ExtendedComplex> out;
        if (s.poles.empty())
            out.push_back(ExtendedComplex::infinity());
        for (const auto &p : s.poles)
            out.emplace_back(p.location);
        return out;
    };
    std::vector<ExtendedBicomplex> markers;
    for (const auto &a : slot_poles(r1))
        for (const auto &b : slot_poles(r2))
            markers.emplace_back(a, b);
    return markers;
}

std::uint64_t fit_seed(std::uint64_t seed, int slot)
{
    return mix(seed ^ (0x51u + static_cast<std::uint64_t>(slot)));
}

std::uint64_t validation_seed(std::uint64_t seed, int slot)
{
    return mix(fit_seed(seed, slot));
}

SlotFit fit_polynomial_slot(const SlotFunction &f, const PlanarRegion &region, double eps, const FitOptions &opts)
{
    if (region.hole_count() > 0 && !opts.allow_holes) {
        throw PolePlacementError("polynomial fit needs a region with connected complement");
    }
    return escalate(f, region, {}, eps, opts);
}

SlotFit fit_rational_slot(const SlotFunction &f, const PlanarRegion &region, const std::vector<PoleSpec> &poles,
                          double eps, const FitOptions &opts)
{
    validate_poles(region, poles);
    return escalate(f, region, poles, eps, opts);
}

void validate_slot_function(const Expression &f, const PlanarRegion &region)
{
    for (const auto &p : f.all_declared_poles()) {
        if (region.contains(p))
            throw DomainError("declared pole of the function lies in the region");
    }
}

namespace
{

struct SlotOutcome {
    SlotFit fit;
    std::vector<PoleSpec> poles;
    bool rational = false;
};

SlotOutcome run_slot(const Expression &f, const PlanarRegion &region, double eps, const ApproxOptions &opts, int l)
{
    SlotOutcome out;
    FitOptions fo;
    fo.max_degree = opts.max_degree;
    fo.n_boundary = opts.n_boundary;
    fo.seed = fit_seed(opts.seed, l);

    const bool holes = region.hole_count() > 0;
    out.rational = holes && !opts.polynomial_only;
    if (out.rational) {
        if (opts.poles[l]) {
            out.poles = *opts.poles[l];
        } else {
            for (int h = 0; h < region.hole_count(); ++h)
                out.poles.push_back({region.hole_point(h), opts.max_degree});
        }
        validate_poles(region, out.poles);
    }
    fo.allow_holes = opts.polynomial_only;

    const SlotFunction fn = [&f](cplx z) { return f(z); };
    try {
        out.fit = out.rational ? fit_rational_slot(fn, region, out.poles, eps, fo)
                               : fit_polynomial_slot(fn, region, eps, fo);
    } catch (const DegreeExceededError &e) {
        out.fit = e.best();
        out.fit.achieved = false;
        out.fit.diagnostic = e.what();
    } catch (const IllConditionedError &e) {
        if (e.best()) {
            out.fit = *e.best();
        } else {
            out.fit.sup_error = std::numeric_limits<double>::infinity();
            out.fit.approximant.poly = {cplx{}};
        }
        out.fit.achieved = false;
        out.fit.diagnostic = e.what();
    }
    return out;
}

} // namespace

ApproxResult approximate(const FunctionSpec &f, const ProductCompact &k, double eps, const ApproxOptions &opts)
{
    if (!(eps > 0.0))
        throw DomainError("eps must be positive");
    if (opts.max_degree < 0)
        throw DomainError("max_degree must be non-negative");
    validate_slot_function(f.f1, k.k1);
    validate_slot_function(f.f2, k.k2);

    auto slot1 = std::async(std::launch::async, [&] { return run_slot(f.f1, k.k1, eps, opts, 0); });
    SlotOutcome s2 = run_slot(f.f2, k.k2, eps, opts, 1);
    SlotOutcome s1 = slot1.get();

    ApproxResult res;
    res.approximant = {s1.fit.approximant, s2.fit.approximant};
    ApproxReport &rep = res.report;
    rep.classification = classify_complement(k);
    rep.eps = eps;
    rep.max_degree = opts.max_degree;
    rep.seed = opts.seed;
    rep.sup_error = {s1.fit.sup_error, s2.fit.sup_error};
    rep.pole_markers = res.approximant.pole_markers();

    const SlotOutcome *outcomes[2] = {&s1, &s2};
    for (int l = 0; l < 2; ++l) {
        const SlotOutcome &o = *outcomes[l];
        SlotReport &sr = rep.slots[l];
        sr.rational = o.rational;
        sr.degree = o.fit.degree;
        for (std::size_t j = 0; j < o.poles.size(); ++j) {
            const int used = j < o.fit.pole_orders.size() ? o.fit.pole_orders[j] : 0;
            sr.poles.push_back({o.poles[j].location, used});
        }
        sr.n_fit_boundary = o.fit.n_fit_boundary;
        sr.n_fit_interior = o.fit.n_fit_interior;
        sr.n_validation_boundary = o.fit.n_validation_boundary;
        sr.n_validation_interior = o.fit.n_validation_interior;
        sr.trace = o.fit.trace;
        sr.sup_error = o.fit.sup_error;
        sr.achieved = o.fit.achieved;
        sr.diagnostic = o.fit.diagnostic;

        const PlanarRegion &region = k.slot(l);
        const int nb = std::max(sr.n_validation_boundary, 8);
        const RegionSample check = sample_region(region, nb, nb / 4, validation_seed(opts.seed, l));
        rep.min_denominator[l] = res.approximant.slot(l).min_denominator_modulus(check.all());
    }
    rep.achieved = s1.fit.achieved && s2.fit.achieved && hyp_less(rep.sup_error, Hyperbolic::diagonal(eps)) &&
                   rep.min_denominator[0] > 0.0 && rep.min_denominator[1] > 0.0;
    return res;
}

Hyperbolic sup_error_k(const FunctionSpec &f, const BicomplexRational &r, const ProductCompact &k, int n_validation,
                       std::uint64_t seed)
{
    double err[2];
    for (int l = 0; l < 2; ++l) {
        const RegionSample s = sample_region(k.slot(l), n_validation, n_validation / 4, validation_seed(seed, l));
        const Expression &fl = f.slot(l);
        err[l] = max_error([&fl](cplx z) { return fl(z); }, r.slot(l), s.all());
    }
    return {err[0], err[1]};
}

} // namespace bc
