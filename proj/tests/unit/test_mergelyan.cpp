#include <doctest.h>

#include <bcapprox/errors.hpp>
#include <bcapprox/mergelyan.hpp>

#include "support.hpp"

using namespace bc;

namespace
{

const Expression z = Expression::variable();

Expression c(cplx v)
{
    return Expression::constant(v);
}

Expression inverse(cplx p)
{
    return Expression::divide(c(1.0), z - c(p), {p});
}

const PlanarRegion unit_disk = PlanarRegion::disk(0.0, 1.0);
const PlanarRegion annulus12 = PlanarRegion::annulus(0.0, 1.0, 2.0);

SlotFunction fn(Expression e)
{
    return [e](cplx x) { return e(x); };
}

bool same_approximant(const SlotApproximant &a, const SlotApproximant &b)
{
    if (a.center != b.center || a.scale != b.scale || a.poly != b.poly || a.poles.size() != b.poles.size())
        return false;
    for (std::size_t j = 0; j < a.poles.size(); ++j) {
        if (a.poles[j].location != b.poles[j].location || a.poles[j].scale != b.poles[j].scale ||
            a.poles[j].coeffs != b.poles[j].coeffs)
            return false;
    }
    return true;
}

// exp(x) truncated after x^5, in the unit-disk basis w = x.
SlotApproximant taylor_exp5()
{
    SlotApproximant r;
    double f = 1.0;
    for (int k = 0; k <= 5; ++k) {
        r.poly.push_back(1.0 / f);
        f *= k + 1;
    }
    return r;
}

} // namespace

TEST_CASE("polynomial fits")
{
    const SlotFit sq = fit_polynomial_slot(fn(z * z), PlanarRegion::disk(cplx(0.3, -0.2), 1.5), 1e-12);
    CHECK(sq.achieved);
    CHECK(sq.degree == 2);
    CHECK(sq.sup_error <= 1e-13);

    const SlotFit e = fit_polynomial_slot(fn(Expression::exponential(z)), unit_disk, 1e-8);
    CHECK(e.achieved);
    CHECK(e.degree <= 20);
    CHECK(e.sup_error < 1e-8);
    CHECK(e.n_validation_boundary == 4 * e.n_fit_boundary);

    // Geometric decay with ratio 1/2.
    const SlotFit g = fit_polynomial_slot(fn(inverse(2.0)), unit_disk, 1e-6);
    CHECK(g.achieved);
    CHECK(g.degree >= 14);
    CHECK(g.degree <= 22);

    CHECK_THROWS_AS(fit_polynomial_slot(fn(z), annulus12, 1e-6), PolePlacementError);
    CHECK_THROWS_AS(fit_polynomial_slot(fn(Expression::exponential(z)), unit_disk, 1e-14, {.max_degree = 4}),
                    DegreeExceededError);
}

TEST_CASE("rational fits")
{
    const cplx p(0.2, 2.5);
    const SlotFit a = fit_rational_slot(fn(inverse(p)), PlanarRegion::polygon_with_holes(
                                                            {cplx(-3, 0), cplx(3, 0), cplx(3, 5), cplx(-3, 5)},
                                                            {{cplx(-0.5, 2), cplx(1, 2), cplx(1, 3), cplx(-0.5, 3)}}),
                                        {{p, 4}}, 1e-12);
    CHECK(a.achieved);
    CHECK(a.sup_error <= 1e-13);
    CHECK(a.pole_orders == std::vector<int>{1});

    const SlotFit b = fit_rational_slot(fn(inverse(0.0)), annulus12, {{0.0, 40}}, 1e-10);
    CHECK(b.achieved);
    CHECK(b.sup_error <= 1e-13);
    CHECK(b.pole_orders == std::vector<int>{1});

    // exp(1/z) on annulus(0, 0.5, 2): the Laurent tail sum_{m>M} 2^m / m! first
    // drops below 1e-6 at M = 13 on the inner circle.
    double tail = 0.0, term = 1.0;
    int m_star = 0;
    for (int m = 1; m < 60; ++m) {
        term *= 2.0 / m;
        if (m > 13)
            tail += term;
    }
    CHECK(tail < 1e-6);
    m_star = 13;
    const SlotFit e = fit_rational_slot(fn(Expression::exponential(Expression::divide(c(1.0), z, {0.0}))),
                                        PlanarRegion::annulus(0.0, 0.5, 2.0), {{0.0, 40}}, 1e-6);
    CHECK(e.achieved);
    REQUIRE(e.pole_orders.size() == 1);
    CHECK(e.pole_orders[0] <= m_star);
}

TEST_CASE("pole placement is validated")
{
    const SlotFunction f = fn(inverse(0.0));
    CHECK_THROWS_AS(fit_rational_slot(f, annulus12, {}, 1e-6), PolePlacementError);
    CHECK_THROWS_AS(fit_rational_slot(f, annulus12, {{1.5, 2}}, 1e-6), PolePlacementError);
    CHECK_THROWS_AS(fit_rational_slot(f, annulus12, {{5.0, 2}}, 1e-6), PolePlacementError);
    CHECK_THROWS_AS(fit_rational_slot(f, annulus12, {{0.0, 2}, {0.1, 2}}, 1e-6), PolePlacementError);
    CHECK_THROWS_AS(fit_rational_slot(f, annulus12, {{0.0, 0}}, 1e-6), DomainError);
}

TEST_CASE("poles are necessary on a region with a hole")
{
    FitOptions opts;
    opts.allow_holes = true;
    try {
        (void)fit_polynomial_slot(fn(inverse(0.0)), annulus12, 1e-10, opts);
        FAIL("polynomial fit of 1/z on an annulus should not converge");
    } catch (const DegreeExceededError &e) {
        CHECK(e.best().trace.size() == 41);
        for (const FitStep &s : e.best().trace)
            CHECK(s.validation_error >= 0.1);
        CHECK(e.best().sup_error >= 0.1);
    }
    const SlotFit r = fit_rational_slot(fn(inverse(0.0)), annulus12, {{0.0, 1}}, 1e-10);
    CHECK(r.sup_error <= 1e-10);
}

TEST_CASE("approximate dispatches on the complement class")
{
    SUBCASE("T4: polynomial pair")
    {
        const ApproxResult r =
            approximate({Expression::power(z, 2), Expression::power(z, 3)}, {unit_disk, unit_disk}, 1e-10);
        CHECK(r.report.achieved);
        CHECK(r.report.classification.cls == ComplementClass::T4);
        CHECK(r.report.sup_error.a1 <= 1e-12);
        CHECK(r.report.sup_error.a2 <= 1e-12);
        REQUIRE(r.report.pole_markers.size() == 1);
        CHECK(r.report.pole_markers[0].kind() == ExtendedBicomplex::Kind::infinite_both);
    }

    SUBCASE("T2: rational slot 1, polynomial slot 2")
    {
        const ApproxResult r = approximate({inverse(0.0), Expression::exponential(z)}, {annulus12, unit_disk}, 1e-10);
        CHECK(r.report.achieved);
        CHECK(r.report.classification.cls == ComplementClass::T2);
        CHECK(r.report.slots[0].rational);
        CHECK_FALSE(r.report.slots[1].rational);
        REQUIRE(r.report.pole_markers.size() == 1);
        const ExtendedBicomplex &m = r.report.pole_markers[0];
        CHECK(m.kind() == ExtendedBicomplex::Kind::infinite_e2);
        CHECK(m.c1 == ExtendedComplex(cplx(0.0)));
        CHECK(r.report.min_denominator[0] > 0.0);
    }

    SUBCASE("T1: one pole per slot")
    {
        const cplx q(5, 1);
        const ApproxResult r = approximate({inverse(0.0), inverse(q)},
                                           {annulus12, PlanarRegion::annulus(q, 0.5, 1.0)}, 1e-10);
        CHECK(r.report.achieved);
        CHECK(r.report.classification.cls == ComplementClass::T1);
        REQUIRE(r.report.pole_markers.size() == 1);
        CHECK(r.report.pole_markers[0] == ExtendedBicomplex(cplx(0.0), q));
        CHECK(r.report.min_denominator[0] > 0.0);
        CHECK(r.report.min_denominator[1] > 0.0);
        // A pole of the approximant is a zero divisor for evaluation.
        CHECK_THROWS_AS(r.approximant(Bicomplex::idempotent(0.0, 1.7)), NullConeError);
    }

    SUBCASE("polynomial-only leaves the hole slot unresolved")
    {
        ApproxOptions opts;
        opts.polynomial_only = true;
        const ApproxResult r = approximate({inverse(0.0), Expression::exponential(z)}, {annulus12, unit_disk}, 1e-10, opts);
        CHECK_FALSE(r.report.achieved);
        CHECK(r.report.sup_error.a1 >= 0.1);
        CHECK(r.report.slots[1].achieved);
        CHECK_FALSE(r.report.slots[0].diagnostic.empty());
    }

    CHECK_THROWS_AS(approximate({inverse(0.5), z}, {unit_disk, unit_disk}, 1e-6), DomainError);
    CHECK_THROWS_AS(approximate({z, z}, {unit_disk, unit_disk}, 0.0), DomainError);
    ApproxOptions bad;
    bad.poles[0] = std::vector<PoleSpec>{{1.5, 3}};
    CHECK_THROWS_AS(approximate({inverse(0.0), z}, {annulus12, unit_disk}, 1e-6, bad), PolePlacementError);
}

TEST_CASE("slot independence")
{
    const Expression f1 = Expression::exponential(z) * z;
    const ApproxResult a = approximate({f1, Expression::exponential(z)}, {unit_disk, unit_disk}, 1e-9);
    const ApproxResult b = approximate({f1, inverse(3.0)}, {unit_disk, unit_disk}, 1e-9);
    CHECK(same_approximant(a.approximant.r1, b.approximant.r1));
    CHECK(a.report.sup_error.a1 == b.report.sup_error.a1);

    FitOptions fo;
    fo.seed = fit_seed(default_seed, 0);
    const SlotFit alone = fit_polynomial_slot(fn(f1), unit_disk, 1e-9, fo);
    CHECK(same_approximant(alone.approximant, a.approximant.r1));
    CHECK(alone.sup_error == a.report.sup_error.a1);

    fo.seed = fit_seed(default_seed, 1);
    const SlotFit second = fit_polynomial_slot(fn(inverse(3.0)), unit_disk, 1e-9, fo);
    CHECK(same_approximant(second.approximant, b.approximant.r2));
}

TEST_CASE("monotone refinement")
{
    const FunctionSpec f{Expression::exponential(z * c(3.0)), inverse(cplx(1.2, 0.3))};
    double prev[2] = {INFINITY, INFINITY};
    for (int d = 0; d <= 16; ++d) {
        ApproxOptions opts;
        opts.max_degree = d;
        const ApproxResult r = approximate(f, {unit_disk, unit_disk}, 1e-15, opts);
        CHECK(r.report.sup_error.a1 <= prev[0]);
        CHECK(r.report.sup_error.a2 <= prev[1]);
        prev[0] = r.report.sup_error.a1;
        prev[1] = r.report.sup_error.a2;
    }
}

TEST_CASE("sup error on K")
{
    const FunctionSpec e{Expression::exponential(z), Expression::exponential(z)};
    const ProductCompact bidisk{unit_disk, unit_disk};

    const ApproxResult exact = approximate({z * z, z * z * z}, bidisk, 1e-10);
    const Hyperbolic zero = sup_error_k({z * z, z * z * z}, exact.approximant, bidisk, 512);
    CHECK(zero.a1 <= 1e-13);
    CHECK(zero.a2 <= 1e-13);

    // Degree-5 Taylor pair: the error peaks at z = 1 with e - sum_{k<=5} 1/k!.
    const BicomplexRational t{taylor_exp5(), taylor_exp5()};
    const Hyperbolic te = sup_error_k(e, t, bidisk, 512);
    const double remainder = std::exp(1.0) - (1.0 + 1.0 + 0.5 + 1.0 / 6 + 1.0 / 24 + 1.0 / 120);
    CHECK(std::abs(te.a1 - remainder) < 1e-12);
    CHECK(std::abs(te.a2 - remainder) < 1e-12);

    // Offsets in each slot stay in that slot.
    SlotApproximant r1 = taylor_exp5(), r2 = taylor_exp5();
    const FunctionSpec shifted{c(1e-3), c(1e-7)};
    r1.poly = {0.0};
    r2.poly = {0.0};
    const Hyperbolic sep = sup_error_k(shifted, {r1, r2}, bidisk, 256);
    CHECK(std::abs(sep.a1 - 1e-3) < 1e-18);
    CHECK(std::abs(sep.a2 - 1e-7) < 1e-22);
}
