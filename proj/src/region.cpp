#include <bcapprox/region.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace bc
{

namespace
{

double cross(cplx a, cplx b)
{
    return a.real() * b.imag() - a.imag() * b.real();
}

double signed_area(const std::vector<cplx> &poly)
{
    double a = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i)
        a += cross(poly[i], poly[(i + 1) % poly.size()]);
    return 0.5 * a;
}

double perimeter(const std::vector<cplx> &poly)
{
    double len = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i)
        len += std::abs(poly[(i + 1) % poly.size()] - poly[i]);
    return len;
}

double segment_distance(cplx p, cplx a, cplx b)
{
    const cplx ab = b - a;
    const double len2 = std::norm(ab);
    double t = len2 > 0.0 ? std::real(std::conj(ab) * (p - a)) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

double boundary_distance(cplx p, const std::vector<cplx> &poly)
{
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i)
        d = std::min(d, segment_distance(p, poly[i], poly[(i + 1) % poly.size()]));
    return d;
}

// Crossing-number test; points on the boundary may land either way.
bool inside_polygon(cplx p, const std::vector<cplx> &poly)
{
    bool in = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const cplx a = poly[i], b = poly[j];
        if ((a.imag() > p.imag()) != (b.imag() > p.imag())) {
            const double x = (b.real() - a.real()) * (p.imag() - a.imag()) / (b.imag() - a.imag()) + a.real();
            if (p.real() < x)
                in = !in;
        }
    }
    return in;
}

int orientation(cplx a, cplx b, cplx c)
{
    const double v = cross(b - a, c - a);
    if (v > 0.0)
        return 1;
    if (v < 0.0)
        return -1;
    return 0;
}

bool on_segment(cplx a, cplx b, cplx p)
{
    return std::min(a.real(), b.real()) <= p.real() && p.real() <= std::max(a.real(), b.real()) &&
           std::min(a.imag(), b.imag()) <= p.imag() && p.imag() <= std::max(a.imag(), b.imag());
}

bool segments_intersect(cplx a, cplx b, cplx c, cplx d)
{
    const int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    const int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4)
        return true;
    if (o1 == 0 && on_segment(a, b, c))
        return true;
    if (o2 == 0 && on_segment(a, b, d))
        return true;
    if (o3 == 0 && on_segment(c, d, a))
        return true;
    if (o4 == 0 && on_segment(c, d, b))
        return true;
    return false;
}

bool polylines_intersect(const std::vector<cplx> &p, const std::vector<cplx> &q)
{
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
            if (segments_intersect(p[i], p[(i + 1) % p.size()], q[j], q[(j + 1) % q.size()]))
                return true;
    return false;
}

bool all_finite(const std::vector<cplx> &poly)
{
    return std::all_of(poly.begin(), poly.end(),
                       [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

void validate_simple_polygon(const std::vector<cplx> &poly, const char *what)
{
    if (poly.size() < 3) {
        throw GeometryError(std::string(what) + ": polygon needs at least 3 vertices");
    }
    if (!all_finite(poly)) {
        throw GeometryError(std::string(what) + ": non-finite vertex");
    }
    const double per = perimeter(poly);
    if (!(std::abs(signed_area(poly)) > 1e-12 * per * per)) {
        throw GeometryError(std::string(what) + ": polygon has empty interior");
    }
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (poly[i] == poly[(i + 1) % n]) {
            throw GeometryError(std::string(what) + ": repeated vertex");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if (adjacent)
                continue;
            if (segments_intersect(poly[i], poly[(i + 1) % n], poly[j], poly[(j + 1) % n])) {
                throw GeometryError(std::string(what) + ": polygon is self-intersecting");
            }
        }
    }
}

cplx polygon_centroid(const std::vector<cplx> &poly)
{
    double a = 0.0;
    cplx c{};
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const cplx p = poly[i], q = poly[(i + 1) % poly.size()];
        const double w = cross(p, q);
        a += w;
        c += w * (p + q);
    }
    return c / (3.0 * a);
}

// A point inside the polygon far from its boundary.
cplx deep_point(const std::vector<cplx> &poly)
{
    const cplx centroid = polygon_centroid(poly);
    double lo_x = poly[0].real(), hi_x = lo_x, lo_y = poly[0].imag(), hi_y = lo_y;
    for (const auto &v : poly) {
        lo_x = std::min(lo_x, v.real());
        hi_x = std::max(hi_x, v.real());
        lo_y = std::min(lo_y, v.imag());
        hi_y = std::max(hi_y, v.imag());
    }
    const double scale = std::max(hi_x - lo_x, hi_y - lo_y);
    if (inside_polygon(centroid, poly) && boundary_distance(centroid, poly) > 0.05 * scale)
        return centroid;
    cplx best = centroid;
    double best_d = -1.0;
    constexpr int grid = 64;
    for (int i = 0; i < grid; ++i)
        for (int j = 0; j < grid; ++j) {
            const cplx p(lo_x + (hi_x - lo_x) * (i + 0.5) / grid, lo_y + (hi_y - lo_y) * (j + 0.5) / grid);
            if (!inside_polygon(p, poly))
                continue;
            const double d = boundary_distance(p, poly);
            if (d > best_d) {
                best_d = d;
                best = p;
            }
        }
    return best;
}

std::uint64_t splitmix64(std::uint64_t &state)
{
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double unit_double(std::uint64_t bits)
{
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

double radical_inverse(std::uint64_t i, std::uint64_t base)
{
    double inv = 1.0 / static_cast<double>(base), f = inv, r = 0.0;
    while (i > 0) {
        r += f * static_cast<double>(i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

double BoundaryCurve::length() const
{
    return std::visit(overloaded{[](const Circle &c) { return 2.0 * std::numbers::pi * c.radius; },
                                 [](const ClosedPolyline &p) { return perimeter(p.vertices); }},
                      curve_);
}

std::vector<cplx> BoundaryCurve::sample(int n) const
{
    std::vector<cplx> out;
    out.reserve(static_cast<std::size_t>(std::max(n, 0)));
    std::visit(overloaded{[&](const Circle &c) {
                              for (int k = 0; k < n; ++k)
                                  out.push_back(c.center + std::polar(c.radius, 2.0 * std::numbers::pi * k / n));
                          },
                          [&](const ClosedPolyline &p) {
                              const auto &v = p.vertices;
                              const double total = perimeter(v);
                              std::size_t edge = 0;
                              double edge_start = 0.0;
                              for (int k = 0; k < n; ++k) {
                                  const double s = total * k / n;
                                  double edge_len = std::abs(v[(edge + 1) % v.size()] - v[edge]);
                                  while (s > edge_start + edge_len && edge + 1 < v.size()) {
                                      edge_start += edge_len;
                                      ++edge;
                                      edge_len = std::abs(v[(edge + 1) % v.size()] - v[edge]);
                                  }
                                  const double t = edge_len > 0.0 ? (s - edge_start) / edge_len : 0.0;
                                  out.push_back(v[edge] + std::min(t, 1.0) * (v[(edge + 1) % v.size()] - v[edge]));
                              }
                          }},
               curve_);
    return out;
}

PlanarRegion::PlanarRegion(Shape shape) : shape_(std::move(shape))
{
    auto finite = [](double x) { return std::isfinite(x); };
    std::visit(overloaded{[&](const Disk &d) {
                              if (!finite(d.center.real()) || !finite(d.center.imag()) || !(d.radius > 0.0) ||
                                  !finite(d.radius))
                                  throw GeometryError("disk: radius must be positive and finite");
                          },
                          [&](const Annulus &a) {
                              if (!finite(a.center.real()) || !finite(a.center.imag()) || !(a.r_in > 0.0) ||
                                  !(a.r_in < a.r_out) || !finite(a.r_out))
                                  throw GeometryError("annulus: need 0 < r_in < r_out");
                          },
                          [&](const Polygon &p) { validate_simple_polygon(p.vertices, "polygon"); },
                          [&](const PolygonWithHoles &p) {
                              validate_simple_polygon(p.outer, "outer boundary");
                              for (std::size_t h = 0; h < p.holes.size(); ++h) {
                                  const auto &hole = p.holes[h];
                                  validate_simple_polygon(hole, "hole");
                                  for (const auto &v : hole)
                                      if (!inside_polygon(v, p.outer) || boundary_distance(v, p.outer) <= 0.0)
                                          throw GeometryError("hole is not strictly inside the outer boundary");
                                  if (polylines_intersect(hole, p.outer))
                                      throw GeometryError("hole touches the outer boundary");
                                  for (std::size_t g = 0; g < h; ++g) {
                                      const auto &other = p.holes[g];
                                      if (polylines_intersect(hole, other) || inside_polygon(hole[0], other) ||
                                          inside_polygon(other[0], hole))
                                          throw GeometryError("holes overlap");
                                  }
                              }
                          }},
               shape_);

    std::visit(overloaded{[&](const Disk &d) {
                              bbox_[0] = d.center.real() - d.radius;
                              bbox_[1] = d.center.imag() - d.radius;
                              bbox_[2] = d.center.real() + d.radius;
                              bbox_[3] = d.center.imag() + d.radius;
                          },
                          [&](const Annulus &a) {
                              bbox_[0] = a.center.real() - a.r_out;
                              bbox_[1] = a.center.imag() - a.r_out;
                              bbox_[2] = a.center.real() + a.r_out;
                              bbox_[3] = a.center.imag() + a.r_out;
                          },
                          [&](const auto &p) {
                              const std::vector<cplx> *outer = nullptr;
                              if constexpr (std::is_same_v<std::decay_t<decltype(p)>, Polygon>)
                                  outer = &p.vertices;
                              else
                                  outer = &p.outer;
                              bbox_[0] = bbox_[2] = (*outer)[0].real();
                              bbox_[1] = bbox_[3] = (*outer)[0].imag();
                              for (const auto &v : *outer) {
                                  bbox_[0] = std::min(bbox_[0], v.real());
                                  bbox_[1] = std::min(bbox_[1], v.imag());
                                  bbox_[2] = std::max(bbox_[2], v.real());
                                  bbox_[3] = std::max(bbox_[3], v.imag());
                              }
                          }},
               shape_);
}

int PlanarRegion::hole_count() const
{
    return std::visit(overloaded{[](const Disk &) { return 0; }, [](const Annulus &) { return 1; },
                                 [](const Polygon &) { return 0; },
                                 [](const PolygonWithHoles &p) { return static_cast<int>(p.holes.size()); }},
                      shape_);
}

bool PlanarRegion::contains(cplx p) const
{
    return complement_component(p) < 0;
}

int PlanarRegion::complement_component(cplx p) const
{
    return std::visit(overloaded{[&](const Disk &d) { return std::abs(p - d.center) <= d.radius ? -1 : 0; },
                                 [&](const Annulus &a) {
                                     const double r = std::abs(p - a.center);
                                     if (r < a.r_in)
                                         return 1;
                                     return r > a.r_out ? 0 : -1;
                                 },
                                 [&](const Polygon &poly) {
                                     if (boundary_distance(p, poly.vertices) == 0.0)
                                         return -1;
                                     return inside_polygon(p, poly.vertices) ? -1 : 0;
                                 },
                                 [&](const PolygonWithHoles &poly) {
                                     if (boundary_distance(p, poly.outer) == 0.0)
                                         return -1;
                                     if (!inside_polygon(p, poly.outer))
                                         return 0;
                                     for (std::size_t h = 0; h < poly.holes.size(); ++h) {
                                         if (boundary_distance(p, poly.holes[h]) == 0.0)
                                             return -1;
                                         if (inside_polygon(p, poly.holes[h]))
                                             return static_cast<int>(h) + 1;
                                     }
                                     return -1;
                                 }},
                      shape_);
}

std::vector<BoundaryCurve> PlanarRegion::boundary() const
{
    std::vector<BoundaryCurve> out;
    std::visit(overloaded{[&](const Disk &d) { out.emplace_back(Circle{d.center, d.radius}); },
                          [&](const Annulus &a) {
                              out.emplace_back(Circle{a.center, a.r_out});
                              out.emplace_back(Circle{a.center, a.r_in});
                          },
                          [&](const Polygon &p) { out.emplace_back(ClosedPolyline{p.vertices}); },
                          [&](const PolygonWithHoles &p) {
                              out.emplace_back(ClosedPolyline{p.outer});
                              for (const auto &h : p.holes)
                                  out.emplace_back(ClosedPolyline{h});
                          }},
               shape_);
    return out;
}

cplx PlanarRegion::reference_center() const
{
    return {0.5 * (bbox_[0] + bbox_[2]), 0.5 * (bbox_[1] + bbox_[3])};
}

double PlanarRegion::reference_radius() const
{
    const cplx c = reference_center();
    return std::visit(overloaded{[&](const Disk &d) { return std::abs(d.center - c) + d.radius; },
                                 [&](const Annulus &a) { return std::abs(a.center - c) + a.r_out; },
                                 [&](const Polygon &p) {
                                     double r = 0.0;
                                     for (const auto &v : p.vertices)
                                         r = std::max(r, std::abs(v - c));
                                     return r;
                                 },
                                 [&](const PolygonWithHoles &p) {
                                     double r = 0.0;
                                     for (const auto &v : p.outer)
                                         r = std::max(r, std::abs(v - c));
                                     return r;
                                 }},
                      shape_);
}

cplx PlanarRegion::hole_point(int h) const
{
    if (h < 0 || h >= hole_count()) {
        throw DomainError("hole index out of range");
    }
    if (const auto *a = std::get_if<Annulus>(&shape_))
        return a->center;
    return deep_point(std::get<PolygonWithHoles>(shape_).holes[static_cast<std::size_t>(h)]);
}

ComplementClassification classify_complement(const ProductCompact &k)
{
    const int h1 = k.k1.hole_count(), h2 = k.k2.hole_count();
    ComplementClassification out{};
    out.components[0] = k.k1.complement_components();
    out.components[1] = k.k2.complement_components();
    if (h1 > 0 && h2 > 0)
        out.cls = ComplementClass::T1;
    else if (h1 > 0)
        out.cls = ComplementClass::T2;
    else if (h2 > 0)
        out.cls = ComplementClass::T3;
    else
        out.cls = ComplementClass::T4;
    return out;
}

std::vector<int> allocate_boundary_samples(const std::vector<double> &lengths, int n_boundary, int min_per_curve)
{
    const std::size_t k = lengths.size();
    std::vector<int> alloc(k, min_per_curve);
    const int total = std::max(n_boundary, min_per_curve * static_cast<int>(k));
    std::vector<bool> pinned(k, false);

    // Pin curves whose proportional share falls below the minimum, then
    // redistribute the remainder among the others.
    std::vector<double> share(k, 0.0);
    while (true) {
        double free_len = 0.0;
        int free_budget = total;
        for (std::size_t i = 0; i < k; ++i) {
            if (pinned[i])
                free_budget -= min_per_curve;
            else
                free_len += lengths[i];
        }
        bool changed = false;
        for (std::size_t i = 0; i < k; ++i) {
            if (pinned[i])
                continue;
            share[i] = free_len > 0.0 ? free_budget * lengths[i] / free_len : 0.0;
            if (share[i] < min_per_curve) {
                pinned[i] = true;
                changed = true;
            }
        }
        if (!changed)
            break;
    }

    int used = 0;
    std::vector<std::pair<double, std::size_t>> remainders;
    for (std::size_t i = 0; i < k; ++i) {
        if (pinned[i]) {
            alloc[i] = min_per_curve;
        } else {
            alloc[i] = static_cast<int>(std::floor(share[i]));
            remainders.emplace_back(share[i] - alloc[i], i);
        }
        used += alloc[i];
    }
    std::stable_sort(remainders.begin(), remainders.end(),
                     [](const auto &a, const auto &b) { return a.first > b.first; });
    for (std::size_t r = 0; used < total && r < remainders.size(); ++r, ++used)
        ++alloc[remainders[r].second];
    return alloc;
}

std::vector<cplx> RegionSample::all() const
{
    std::vector<cplx> out(boundary);
    out.insert(out.end(), interior.begin(), interior.end());
    return out;
}

RegionSample sample_region(const PlanarRegion &r, int n_boundary, int n_interior, std::uint64_t seed)
{
    if (n_boundary < 8) {
        throw DomainError("sample_region requires n_boundary >= 8");
    }
    if (n_interior < 0) {
        throw DomainError("sample_region requires n_interior >= 0");
    }
    RegionSample out;
    const auto curves = r.boundary();
    std::vector<double> lengths;
    for (const auto &c : curves)
        lengths.push_back(c.length());
    out.per_curve = allocate_boundary_samples(lengths, n_boundary);
    for (std::size_t i = 0; i < curves.size(); ++i) {
        const auto pts = curves[i].sample(out.per_curve[i]);
        out.boundary.insert(out.boundary.end(), pts.begin(), pts.end());
    }

    std::uint64_t state = seed;
    const double shift_x = unit_double(splitmix64(state));
    const double shift_y = unit_double(splitmix64(state));
    const double w = r.bbox_max_x() - r.bbox_min_x();
    const double h = r.bbox_max_y() - r.bbox_min_y();
    const std::uint64_t max_attempts = 10000 + 1000 * static_cast<std::uint64_t>(n_interior);
    for (std::uint64_t i = 1; static_cast<int>(out.interior.size()) < n_interior; ++i) {
        if (i > max_attempts) {
            throw GeometryError("region interior too thin to sample");
        }
        double fx = radical_inverse(i, 2) + shift_x;
        double fy = radical_inverse(i, 3) + shift_y;
        fx -= std::floor(fx);
        fy -= std::floor(fy);
        const cplx p(r.bbox_min_x() + fx * w, r.bbox_min_y() + fy * h);
        if (r.contains(p))
            out.interior.push_back(p);
    }
    return out;
}

} // namespace bc
