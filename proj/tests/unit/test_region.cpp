#include <doctest.h>

#include <numbers>

#include <bcapprox/errors.hpp>
#include <bcapprox/region.hpp>

#include "support.hpp"

using namespace bc;
using std::numbers::pi;

namespace
{

std::vector<cplx> square(cplx c, double h)
{
    return {c + cplx(-h, -h), c + cplx(h, -h), c + cplx(h, h), c + cplx(-h, h)};
}

PlanarRegion two_holes()
{
    return PlanarRegion::polygon_with_holes(square(0.0, 3.0), {square(cplx(-1.5, 0), 0.5), square(cplx(1.5, 0), 0.5)});
}

} // namespace

TEST_CASE("geometry validation")
{
    CHECK_THROWS_AS(PlanarRegion::disk(0.0, 0.0), GeometryError);
    CHECK_THROWS_AS(PlanarRegion::disk(0.0, -1.0), GeometryError);
    CHECK_THROWS_AS(PlanarRegion::annulus(0.0, 2.0, 1.0), GeometryError);
    CHECK_THROWS_AS(PlanarRegion::annulus(0.0, 1.0, 1.0), GeometryError);
    CHECK_THROWS_AS(PlanarRegion::polygon({0.0, 1.0}), GeometryError);
    CHECK_THROWS_AS(PlanarRegion::polygon({0.0, 1.0, 2.0}), GeometryError);
    // Bow tie.
    CHECK_THROWS_AS(PlanarRegion::polygon({0.0, cplx(1, 1), cplx(1, 0), cplx(0, 1)}), GeometryError);
    // Hole poking out of the outer boundary.
    CHECK_THROWS_AS(PlanarRegion::polygon_with_holes(square(0.0, 1.0), {square(cplx(1, 0), 0.5)}), GeometryError);
    // Overlapping holes.
    CHECK_THROWS_AS(PlanarRegion::polygon_with_holes(square(0.0, 3.0), {square(0.0, 1.0), square(cplx(0.5, 0), 1.0)}),
                    GeometryError);
}

TEST_CASE("membership and complement components")
{
    const PlanarRegion a = PlanarRegion::annulus(0.0, 1.0, 2.0);
    CHECK(a.hole_count() == 1);
    CHECK(a.contains(1.5));
    CHECK(a.contains(1.0));
    CHECK_FALSE(a.contains(0.5));
    CHECK(a.complement_component(0.0) == 1);
    CHECK(a.complement_component(3.0) == 0);
    CHECK(a.complement_component(1.5) == -1);
    CHECK(a.hole_point(0) == cplx(0.0));

    const PlanarRegion p = two_holes();
    CHECK(p.hole_count() == 2);
    CHECK(p.complement_components() == 3);
    CHECK(p.complement_component(cplx(-1.5, 0)) == 1);
    CHECK(p.complement_component(cplx(1.5, 0)) == 2);
    CHECK(p.complement_component(cplx(0, 0)) == -1);
    CHECK(p.complement_component(cplx(5, 0)) == 0);
    CHECK(p.complement_component(p.hole_point(1)) == 2);

    const PlanarRegion d = PlanarRegion::disk(cplx(1, 1), 2.0);
    CHECK(d.hole_count() == 0);
    CHECK(d.reference_center() == cplx(1, 1));
    CHECK(std::abs(d.reference_radius() - 2.0) < 1e-15);
}

TEST_CASE("complement classification")
{
    const PlanarRegion disk = PlanarRegion::disk(0.0, 1.0);
    const PlanarRegion ann = PlanarRegion::annulus(0.0, 1.0, 2.0);

    auto c4 = classify_complement({disk, disk});
    CHECK(c4.cls == ComplementClass::T4);
    CHECK(c4.components[0] == 1);
    CHECK(c4.components[1] == 1);

    auto c2 = classify_complement({ann, disk});
    CHECK(c2.cls == ComplementClass::T2);
    CHECK(c2.components[0] == 2);
    CHECK(c2.components[1] == 1);

    auto c3 = classify_complement({disk, ann});
    CHECK(c3.cls == ComplementClass::T3);

    auto c1 = classify_complement({two_holes(), ann});
    CHECK(c1.cls == ComplementClass::T1);
    CHECK(c1.components[0] == 3);
    CHECK(c1.components[1] == 2);

    // Total and consistent with hole counts over the shape vocabulary.
    const std::vector<PlanarRegion> shapes{disk, ann, PlanarRegion::polygon(square(0.0, 1.0)), two_holes()};
    for (const auto &a : shapes) {
        for (const auto &b : shapes) {
            const auto c = classify_complement({a, b});
            CHECK(c.components[0] == 1 + a.hole_count());
            CHECK(c.components[1] == 1 + b.hole_count());
            const int expect = a.hole_count() > 0 ? (b.hole_count() > 0 ? 1 : 2) : (b.hole_count() > 0 ? 3 : 4);
            CHECK(static_cast<int>(c.cls) == expect);
        }
    }
}

TEST_CASE("boundary sampling")
{
    const RegionSample d = sample_region(PlanarRegion::disk(0.0, 1.0), 8, 0, 1);
    REQUIRE(d.boundary.size() == 8);
    for (int k = 0; k < 8; ++k)
        CHECK(std::abs(d.boundary[static_cast<std::size_t>(k)] - std::polar(1.0, 2 * pi * k / 8)) < 1e-15);

    const RegionSample a = sample_region(PlanarRegion::annulus(0.0, 1.0, 2.0), 16, 0, 1);
    REQUIRE(a.per_curve.size() == 2);
    CHECK(a.per_curve[0] == 8);
    CHECK(a.per_curve[1] == 8);
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(std::abs(std::abs(a.boundary[k]) - 2.0) < 1e-15);
        CHECK(std::abs(std::abs(a.boundary[8 + k]) - 1.0) < 1e-15);
    }

    const RegionSample s = sample_region(PlanarRegion::polygon(square(0.0, 1.0)), 12, 0, 1);
    REQUIRE(s.boundary.size() == 12);
    int per_side[4] = {0, 0, 0, 0};
    for (cplx p : s.boundary) {
        if (std::abs(p.imag() + 1) < 1e-12 && p.real() < 1 - 1e-12)
            ++per_side[0];
        else if (std::abs(p.real() - 1) < 1e-12 && p.imag() < 1 - 1e-12)
            ++per_side[1];
        else if (std::abs(p.imag() - 1) < 1e-12 && p.real() > -1 + 1e-12)
            ++per_side[2];
        else if (std::abs(p.real() + 1) < 1e-12)
            ++per_side[3];
    }
    for (int side : per_side)
        CHECK(side == 3);

    CHECK_THROWS_AS(sample_region(PlanarRegion::disk(0.0, 1.0), 7, 0, 1), DomainError);
}

TEST_CASE("allocation is proportional to arclength with a floor")
{
    CHECK(allocate_boundary_samples({2 * pi, 4 * pi}, 16) == std::vector<int>{8, 8});
    CHECK(allocate_boundary_samples({4 * pi, 2 * pi}, 300) == std::vector<int>{200, 100});
    CHECK(allocate_boundary_samples({100.0, 1.0}, 100) == std::vector<int>{92, 8});
    const auto v = allocate_boundary_samples({1.0, 1.0, 1.0}, 100);
    CHECK(v[0] + v[1] + v[2] == 100);
    CHECK(allocate_boundary_samples({1.0, 1.0}, 4) == std::vector<int>{8, 8});
}

TEST_CASE("interior sampling is seeded and stays inside")
{
    const PlanarRegion p = two_holes();
    const RegionSample a = sample_region(p, 64, 200, 42);
    const RegionSample b = sample_region(p, 64, 200, 42);
    const RegionSample c = sample_region(p, 64, 200, 43);
    CHECK(a.interior.size() == 200);
    CHECK(a.interior == b.interior);
    CHECK(a.interior != c.interior);
    for (cplx z : a.interior)
        CHECK(p.contains(z));
    CHECK(a.all().size() == a.boundary.size() + a.interior.size());
}
