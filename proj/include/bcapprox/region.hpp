#ifndef BCAPPROX_REGION_HPP
#define BCAPPROX_REGION_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include <bcapprox/bicomplex.hpp>

namespace bc
{

// Plane points are represented as complex numbers x + i y.
struct Disk {
    cplx center;
    double radius;
};

struct Annulus {
    cplx center;
    double r_in;
    double r_out;
};

struct Polygon {
    std::vector<cplx> vertices;
};

struct PolygonWithHoles {
    std::vector<cplx> outer;
    std::vector<std::vector<cplx>> holes;
};

struct Circle {
    cplx center;
    double radius;
};

struct ClosedPolyline {
    std::vector<cplx> vertices;
};

// One closed boundary curve of a region, parametrized by arclength.
class BoundaryCurve
{
public:
    BoundaryCurve(Circle c) : curve_(c) {}
    BoundaryCurve(ClosedPolyline p) : curve_(std::move(p)) {}

    double length() const;
    // n points equispaced in arclength, starting at angle 0 (circle) or at
    // the first vertex (polyline).
    std::vector<cplx> sample(int n) const;

private:
    std::variant<Circle, ClosedPolyline> curve_;
};

// Compact planar region from a closed shape vocabulary whose complement
// topology is known exactly: the number of bounded complement components
// (holes) is read off the shape.
class PlanarRegion
{
public:
    using Shape = std::variant<Disk, Annulus, Polygon, PolygonWithHoles>;

    // Throws GeometryError for degenerate or inconsistent shapes.
    explicit PlanarRegion(Shape shape);

    static PlanarRegion disk(cplx center, double radius) { return PlanarRegion(Disk{center, radius}); }
    static PlanarRegion annulus(cplx center, double r_in, double r_out)
    {
        return PlanarRegion(Annulus{center, r_in, r_out});
    }
    static PlanarRegion polygon(std::vector<cplx> vertices) { return PlanarRegion(Polygon{std::move(vertices)}); }
    static PlanarRegion polygon_with_holes(std::vector<cplx> outer, std::vector<std::vector<cplx>> holes)
    {
        return PlanarRegion(PolygonWithHoles{std::move(outer), std::move(holes)});
    }

    const Shape &shape() const { return shape_; }

    int hole_count() const;
    // Components of C \ K, the unbounded one included.
    int complement_components() const { return 1 + hole_count(); }

    // Closed-set membership (boundary included).
    bool contains(cplx p) const;

    // -1 if p lies in the region, 0 for the unbounded complement component,
    // h + 1 for the h-th hole.
    int complement_component(cplx p) const;

    // Outer boundary first, then one curve per hole.
    std::vector<BoundaryCurve> boundary() const;

    // Smallest disk around the bounding-box center that contains the region.
    cplx reference_center() const;
    double reference_radius() const;

    // A point well inside hole h (centroid when it lies inside the hole).
    cplx hole_point(int h) const;

    double bbox_min_x() const { return bbox_[0]; }
    double bbox_min_y() const { return bbox_[1]; }
    double bbox_max_x() const { return bbox_[2]; }
    double bbox_max_y() const { return bbox_[3]; }

private:
    Shape shape_;
    double bbox_[4];
};

struct ProductCompact {
    PlanarRegion k1;
    PlanarRegion k2;

    const PlanarRegion &slot(int l) const { return l == 0 ? k1 : k2; }
};

// Topological classes of BC \ K for K = K1 e1 + K2 e2:
//   T1 both slot complements have holes, T2 only K1, T3 only K2, T4 neither.
enum class ComplementClass { T1 = 1, T2 = 2, T3 = 3, T4 = 4 };

struct ComplementClassification {
    ComplementClass cls;
    int components[2]; // complement components per slot, unbounded included
};

ComplementClassification classify_complement(const ProductCompact &k);

struct RegionSample {
    std::vector<cplx> boundary;
    std::vector<int> per_curve; // boundary points allotted to each curve, in boundary() order
    std::vector<cplx> interior;

    std::vector<cplx> all() const;
};

// Boundary points are split across curves in proportion to arclength with at
// least 8 per curve; the total is max(n_boundary, 8 * curves). Interior points
// come from a seeded, shifted Halton sequence filtered by membership.
// Throws DomainError if n_boundary < 8.
RegionSample sample_region(const PlanarRegion &r, int n_boundary, int n_interior, std::uint64_t seed);

// Boundary points allotted to each curve of the given lengths.
std::vector<int> allocate_boundary_samples(const std::vector<double> &lengths, int n_boundary, int min_per_curve = 8);

} // namespace bc

#endif
