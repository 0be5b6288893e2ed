#include <optional>
#include <sstream>

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <bcapprox/cli.hpp>
#include <bcapprox/errors.hpp>
#include <bcapprox/json_io.hpp>
#include <bcapprox/mergelyan.hpp>
#include <bcapprox/moebius.hpp>
#include <bcapprox/series.hpp>

namespace py = pybind11;
using namespace bc;

namespace
{

// Python side: a pair (beta1, beta2) where None stands for infinity.
using Slot = std::optional<cplx>;
using Point = std::pair<Slot, Slot>;

ExtendedComplex to_ext(const Slot &s)
{
    return s ? ExtendedComplex(*s) : ExtendedComplex::infinity();
}

Slot from_ext(const ExtendedComplex &z)
{
    return z.is_infinite() ? Slot{} : Slot{z.value()};
}

Point from_ext(const ExtendedBicomplex &z)
{
    return {from_ext(z.c1), from_ext(z.c2)};
}

py::tuple hyp(const Hyperbolic &h)
{
    return py::make_tuple(h.a1, h.a2);
}

TruncatedSeries make_series(const std::string &kind, const std::vector<Bicomplex> &coeffs)
{
    if (kind == "power")
        return TruncatedSeries::power(coeffs);
    if (kind == "laurent")
        return TruncatedSeries::laurent(coeffs);
    throw std::invalid_argument("series kind must be 'power' or 'laurent'");
}

py::object json_to_py(const io::Json &j)
{
    return py::module_::import("json").attr("loads")(io::dump(j));
}

io::Json py_to_json(const py::object &o)
{
    return io::parse_text(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Bicomplex Moebius maps, univalent series functionals and Mergelyan approximation";

    py::register_exception<NullConeError>(m, "NullConeError", PyExc_ZeroDivisionError);
    py::register_exception<DegenerateMapError>(m, "DegenerateMapError", PyExc_ValueError);
    py::register_exception<InvalidRotationError>(m, "InvalidRotationError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<GeometryError>(m, "GeometryError", PyExc_ValueError);
    py::register_exception<PolePlacementError>(m, "PolePlacementError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Bicomplex>(m, "Bicomplex")
        .def(py::init([](cplx z1, cplx z2) { return Bicomplex::cartesian(z1, z2); }), py::arg("z1") = cplx(0.0),
             py::arg("z2") = cplx(0.0))
        .def_static("idempotent", [](cplx b1, cplx b2) { return Bicomplex::idempotent(b1, b2); })
        .def_property_readonly("beta1", &Bicomplex::beta1)
        .def_property_readonly("beta2", &Bicomplex::beta2)
        .def_property_readonly("z1", &Bicomplex::z1)
        .def_property_readonly("z2", &Bicomplex::z2)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__truediv__", [](const Bicomplex &a, const Bicomplex &b) { return a * invert(b); })
        .def("__repr__", [](const Bicomplex &z) {
            std::ostringstream s;
            s << "Bicomplex.idempotent(" << z.beta1() << ", " << z.beta2() << ")";
            return s.str();
        });

    m.attr("e1") = e1;
    m.attr("e2") = e2;
    m.attr("j") = Bicomplex::cartesian(0.0, 1.0);

    m.def("invert", [](const Bicomplex &z) { return invert(z); });
    m.def("conjugate", [](const Bicomplex &z, const std::string &kind) {
        if (kind == "bar")
            return conjugate(z, Conjugation::bar);
        if (kind == "dagger")
            return conjugate(z, Conjugation::dagger);
        if (kind == "star")
            return conjugate(z, Conjugation::star);
        throw std::invalid_argument("conjugation must be 'bar', 'dagger' or 'star'");
    });
    m.def("norm_k", [](const Bicomplex &z) { return hyp(norm_k(z)); });
    m.def("is_zero_divisor", [](const Bicomplex &z) { return is_zero_divisor(z); });

    py::class_<MoebiusMap>(m, "MoebiusMap")
        .def(py::init(&moebius_new), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"))
        .def("__call__",
             [](const MoebiusMap &f, const Point &z) {
                 return from_ext(f(ExtendedBicomplex(to_ext(z.first), to_ext(z.second))));
             })
        .def("compose", &moebius_compose)
        .def("inverse", &moebius_inverse)
        .def_property_readonly("pole_pattern", [](const MoebiusMap &f) {
            switch (f.pole_pattern()) {
            case MoebiusMap::PolePattern::affine_both:
                return "affine_both";
            case MoebiusMap::PolePattern::pole_e1:
                return "pole_e1";
            case MoebiusMap::PolePattern::pole_e2:
                return "pole_e2";
            case MoebiusMap::PolePattern::pole_both:
                break;
            }
            return "pole_both";
        });

    py::class_<TruncatedSeries>(m, "Series")
        .def(py::init(&make_series), py::arg("kind"), py::arg("coeffs"))
        .def_property_readonly("kind",
                               [](const TruncatedSeries &s) {
                                   return s.kind() == SeriesKind::power_f ? "power" : "laurent";
                               })
        .def_property_readonly("order", &TruncatedSeries::order)
        .def_property_readonly("coeffs", &TruncatedSeries::coeffs)
        .def("coefficient", &TruncatedSeries::coefficient)
        .def("__call__", &series_eval);

    m.def("koebe_rotation_series", &koebe_rotation_series, py::arg("rotation"), py::arg("n"));
    m.def("sqrt_transform", &sqrt_transform, py::arg("f"), py::arg("terms") = -1);
    m.def("inversion_transform", &inversion_transform, py::arg("g"), py::arg("order") = -1);
    m.def("gronwall_area_sum", [](const TruncatedSeries &g) { return hyp(gronwall_area_sum(g)); });
    m.def("area_closed_form", [](const TruncatedSeries &g, double r) { return hyp(area_closed_form(g, r)); });
    m.def("area_contour_estimate",
          [](const TruncatedSeries &g, double r, int n) { return hyp(area_contour_estimate(g, r, n)); },
          py::arg("g"), py::arg("r"), py::arg("nsamples") = 4096);
    m.def("bieberbach_check", [](const TruncatedSeries &f) {
        const BieberbachResult r = bieberbach_check(f);
        io::Json out;
        out["value"] = io::to_json(r.value);
        out["bound"] = io::to_json(r.bound);
        out["holds"] = r.holds;
        out["trace"] = io::to_json(r);
        return json_to_py(out);
    });
    m.def("koebe_covering",
          [](const TruncatedSeries &f, double r, int n) {
              const CoveringResult c = koebe_covering(f, r, n);
              io::Json out;
              out["value"] = io::to_json(c.value);
              out["bound"] = koebe_radius_bound(r);
              out["trace"] = io::to_json(c);
              return json_to_py(out);
          },
          py::arg("f"), py::arg("r") = 0.99, py::arg("nsamples") = 2048);
    m.def("koebe_radius_bound", &koebe_radius_bound);

    m.def(
        "approximate",
        [](const py::object &function, const py::object &region, double eps, int max_degree, std::uint64_t seed,
           bool polynomial_only) {
            const FunctionSpec f = io::function_from_json(py_to_json(function));
            const ProductCompact k = io::compact_from_json(py_to_json(region));
            ApproxOptions opts;
            opts.max_degree = max_degree;
            opts.seed = seed;
            opts.polynomial_only = polynomial_only;
            ApproxResult r;
            {
                py::gil_scoped_release release;
                r = approximate(f, k, eps, opts);
            }
            io::Json out = io::to_json(r.report);
            out["approximant"] = io::to_json(r.approximant);
            return json_to_py(out);
        },
        py::arg("function"), py::arg("region"), py::arg("eps"), py::arg("max_degree") = 40,
        py::arg("seed") = default_seed, py::arg("polynomial_only") = false);

    m.def(
        "run_cli",
        [](const std::vector<std::string> &args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
