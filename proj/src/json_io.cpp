#include <bcapprox/json_io.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace bc::io
{

namespace
{

[[noreturn]] void fail(const std::string &what)
{
    throw ParseError(what);
}

const Json &field(const Json &j, const char *key)
{
    if (!j.is_object() || !j.contains(key))
        fail(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

double number(const Json &j, const char *what)
{
    if (!j.is_number())
        fail(std::string(what) + ": expected a number");
    return j.get<double>();
}

int integer(const Json &j, const char *what)
{
    if (!j.is_number_integer())
        fail(std::string(what) + ": expected an integer");
    return j.get<int>();
}

std::vector<cplx> point_list(const Json &j, const char *what)
{
    if (!j.is_array())
        fail(std::string(what) + ": expected an array of points");
    std::vector<cplx> out;
    for (const auto &p : j)
        out.push_back(complex_from_json(p));
    return out;
}

Json point_list_json(const std::vector<cplx> &pts)
{
    Json a = Json::array();
    for (const auto &p : pts)
        a.push_back(to_json(p));
    return a;
}

ExtendedComplex extended_slot(const Json &j)
{
    if (j.is_string()) {
        if (j.get<std::string>() == "inf")
            return ExtendedComplex::infinity();
        fail("extended slot: expected [re, im] or \"inf\"");
    }
    return complex_from_json(j);
}

Json extended_slot_json(const ExtendedComplex &c)
{
    return c.is_infinite() ? Json("inf") : to_json(c.value());
}

template <class F> auto guarded(F &&f) -> decltype(f())
{
    try {
        return f();
    } catch (const ParseError &) {
        throw;
    } catch (const nlohmann::json::exception &e) {
        throw ParseError(e.what());
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    } catch (const std::domain_error &e) {
        throw ParseError(e.what());
    }
}

Json steps_json(const std::vector<FitStep> &trace)
{
    Json a = Json::array();
    for (const auto &s : trace) {
        Json step;
        step["degree"] = s.degree;
        step["pole_orders"] = s.pole_orders;
        step["validation_error"] = s.validation_error;
        a.push_back(std::move(step));
    }
    return a;
}

void write_double(std::string &out, double x)
{
    if (!std::isfinite(x)) {
        out += "null";
        return;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    out += buf;
}

void write(std::string &out, const Json &j, int depth)
{
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first)
                out += ",\n";
            first = false;
            out += pad;
            out += Json(it.key()).dump();
            out += ": ";
            write(out, it.value(), depth + 1);
        }
        out += "\n" + close + "}";
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        // Short numeric arrays (points, complex values) stay on one line.
        const bool flat = j.size() <= 4 && std::all_of(j.begin(), j.end(), [](const Json &x) {
                              return x.is_number() || x.is_string() || x.is_null();
                          });
        if (flat) {
            out += "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i)
                    out += ", ";
                write(out, j[i], depth + 1);
            }
            out += "]";
            return;
        }
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i)
                out += ",\n";
            out += pad;
            write(out, j[i], depth + 1);
        }
        out += "\n" + close + "]";
        return;
    }
    case Json::value_t::number_float:
        write_double(out, j.get<double>());
        return;
    default:
        out += j.dump();
        return;
    }
}

} // namespace

cplx complex_from_json(const Json &j)
{
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    fail("expected a complex value [re, im] or a real number");
}

Json to_json(cplx z)
{
    return Json::array({z.real(), z.imag()});
}

Bicomplex bicomplex_from_json(const Json &j)
{
    if (j.is_number())
        return Bicomplex(j.get<double>());
    if (j.is_object()) {
        if (j.contains("b1") || j.contains("b2"))
            return Bicomplex::idempotent(complex_from_json(field(j, "b1")), complex_from_json(field(j, "b2")));
        if (j.contains("z1") || j.contains("z2"))
            return Bicomplex::cartesian(complex_from_json(field(j, "z1")), complex_from_json(field(j, "z2")));
    }
    fail("expected a bicomplex object {\"b1\", \"b2\"} or {\"z1\", \"z2\"}");
}

Json to_json(const Bicomplex &z)
{
    Json j;
    j["b1"] = to_json(z.beta1());
    j["b2"] = to_json(z.beta2());
    return j;
}

ExtendedBicomplex extended_from_json(const Json &j)
{
    if (j.is_object() && (j.contains("b1") || j.contains("b2")))
        return {extended_slot(field(j, "b1")), extended_slot(field(j, "b2"))};
    return bicomplex_from_json(j);
}

Json to_json(const ExtendedBicomplex &z)
{
    Json j;
    j["b1"] = extended_slot_json(z.c1);
    j["b2"] = extended_slot_json(z.c2);
    return j;
}

Json to_json(const Hyperbolic &h)
{
    Json j;
    j["a1"] = h.a1;
    j["a2"] = h.a2;
    return j;
}

MoebiusMap moebius_from_json(const Json &j)
{
    const Bicomplex a = bicomplex_from_json(field(j, "A"));
    const Bicomplex b = bicomplex_from_json(field(j, "B"));
    const Bicomplex c = bicomplex_from_json(field(j, "C"));
    const Bicomplex d = bicomplex_from_json(field(j, "D"));
    return MoebiusMap(a, b, c, d);
}

Json to_json(const MoebiusMap &m)
{
    Json j;
    j["A"] = to_json(m.a());
    j["B"] = to_json(m.b());
    j["C"] = to_json(m.c());
    j["D"] = to_json(m.d());
    return j;
}

TruncatedSeries series_from_json(const Json &j)
{
    return guarded([&] {
        const Json &kind = field(j, "kind");
        if (!kind.is_string())
            fail("series kind must be a string");
        const Json &coeffs = field(j, "coeffs");
        if (!coeffs.is_array())
            fail("series coeffs must be an array");
        std::vector<Bicomplex> c;
        for (const auto &x : coeffs)
            c.push_back(bicomplex_from_json(x));
        const std::string k = kind.get<std::string>();
        TruncatedSeries s = [&] {
            if (k == "power-F")
                return TruncatedSeries::power(std::move(c));
            if (k == "laurent-Sigma")
                return TruncatedSeries::laurent(std::move(c));
            fail("unknown series kind \"" + k + "\"");
        }();
        if (j.contains("N") && integer(j.at("N"), "N") != s.order())
            fail("series N does not match the number of coefficients");
        return s;
    });
}

Json to_json(const TruncatedSeries &s)
{
    Json j;
    j["kind"] = s.kind() == SeriesKind::power_f ? "power-F" : "laurent-Sigma";
    j["N"] = s.order();
    Json c = Json::array();
    for (const auto &x : s.coeffs())
        c.push_back(to_json(x));
    j["coeffs"] = std::move(c);
    return j;
}

PlanarRegion region_from_json(const Json &j)
{
    return guarded([&] {
        const Json &shape = field(j, "shape");
        if (!shape.is_string())
            fail("region shape must be a string");
        const std::string s = shape.get<std::string>();
        if (s == "disk")
            return PlanarRegion::disk(complex_from_json(field(j, "center")), number(field(j, "radius"), "radius"));
        if (s == "annulus")
            return PlanarRegion::annulus(complex_from_json(field(j, "center")), number(field(j, "r_in"), "r_in"),
                                         number(field(j, "r_out"), "r_out"));
        if (s == "polygon")
            return PlanarRegion::polygon(point_list(field(j, "vertices"), "vertices"));
        if (s == "polygon-with-holes") {
            std::vector<std::vector<cplx>> holes;
            const Json &h = field(j, "holes");
            if (!h.is_array())
                fail("holes must be an array of polygons");
            for (const auto &hole : h)
                holes.push_back(point_list(hole, "hole"));
            return PlanarRegion::polygon_with_holes(point_list(field(j, "outer"), "outer"), std::move(holes));
        }
        fail("unknown region shape \"" + s + "\"");
    });
}

Json to_json(const PlanarRegion &r)
{
    Json j;
    std::visit(
        [&](const auto &s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disk>) {
                j["shape"] = "disk";
                j["center"] = to_json(s.center);
                j["radius"] = s.radius;
            } else if constexpr (std::is_same_v<T, Annulus>) {
                j["shape"] = "annulus";
                j["center"] = to_json(s.center);
                j["r_in"] = s.r_in;
                j["r_out"] = s.r_out;
            } else if constexpr (std::is_same_v<T, Polygon>) {
                j["shape"] = "polygon";
                j["vertices"] = point_list_json(s.vertices);
            } else {
                j["shape"] = "polygon-with-holes";
                j["outer"] = point_list_json(s.outer);
                Json holes = Json::array();
                for (const auto &h : s.holes)
                    holes.push_back(point_list_json(h));
                j["holes"] = std::move(holes);
            }
        },
        r.shape());
    return j;
}

ProductCompact compact_from_json(const Json &j)
{
    return ProductCompact{region_from_json(field(j, "k1")), region_from_json(field(j, "k2"))};
}

Expression expression_from_json(const Json &j)
{
    if (j.is_number() || j.is_array())
        return Expression::constant(complex_from_json(j));
    if (j.is_string()) {
        if (j.get<std::string>() == "z")
            return Expression::variable();
        fail("unknown expression token \"" + j.get<std::string>() + "\"");
    }
    const Json &opj = field(j, "op");
    if (!opj.is_string())
        fail("expression op must be a string");
    const std::string op = opj.get<std::string>();
    if (op == "const")
        return Expression::constant(complex_from_json(field(j, "value")));
    if (op == "var")
        return Expression::variable();

    const Json &argj = field(j, "args");
    if (!argj.is_array())
        fail("expression args must be an array");
    std::vector<Expression> args;
    for (const auto &a : argj)
        args.push_back(expression_from_json(a));
    auto need = [&](std::size_t n) {
        if (args.size() != n)
            fail("op \"" + op + "\" takes " + std::to_string(n) + " argument(s)");
    };

    if (op == "add" || op == "mul") {
        if (args.size() < 2)
            fail("op \"" + op + "\" takes at least 2 arguments");
        Expression acc = args[0];
        for (std::size_t i = 1; i < args.size(); ++i)
            acc = op == "add" ? acc + args[i] : acc * args[i];
        return acc;
    }
    if (op == "sub") {
        if (args.size() == 1)
            return -args[0];
        need(2);
        return args[0] - args[1];
    }
    if (op == "neg") {
        need(1);
        return -args[0];
    }
    if (op == "div") {
        need(2);
        std::vector<cplx> poles;
        if (j.contains("poles"))
            poles = point_list(j.at("poles"), "poles");
        return Expression::divide(args[0], args[1], std::move(poles));
    }
    if (op == "pow") {
        need(1);
        return Expression::power(args[0], integer(field(j, "exponent"), "exponent"));
    }
    if (op == "exp") {
        need(1);
        return Expression::exponential(args[0]);
    }
    if (op == "compose") {
        need(2);
        return Expression::compose(args[0], args[1]);
    }
    fail("unknown expression op \"" + op + "\"");
}

Json to_json(const Expression &e)
{
    using Op = Expression::Op;
    Json j;
    auto args = [&] {
        Json a = Json::array();
        for (const auto &x : e.args())
            a.push_back(to_json(x));
        return a;
    };
    switch (e.op()) {
    case Op::constant:
        j["op"] = "const";
        j["value"] = to_json(e.value());
        return j;
    case Op::variable:
        return Json("z");
    case Op::add:
        j["op"] = "add";
        break;
    case Op::sub:
        j["op"] = "sub";
        break;
    case Op::neg:
        j["op"] = "neg";
        break;
    case Op::mul:
        j["op"] = "mul";
        break;
    case Op::div:
        j["op"] = "div";
        break;
    case Op::pow:
        j["op"] = "pow";
        j["exponent"] = e.exponent();
        break;
    case Op::exp:
        j["op"] = "exp";
        break;
    case Op::compose:
        j["op"] = "compose";
        break;
    }
    j["args"] = args();
    if (e.op() == Op::div && !e.declared_poles().empty())
        j["poles"] = point_list_json(e.declared_poles());
    return j;
}

FunctionSpec function_from_json(const Json &j)
{
    return guarded([&] { return FunctionSpec{expression_from_json(field(j, "f1")), expression_from_json(field(j, "f2"))}; });
}

Json to_json(const FunctionSpec &f)
{
    Json j;
    j["f1"] = to_json(f.f1);
    j["f2"] = to_json(f.f2);
    return j;
}

void poles_from_json(const Json &j, ApproxOptions &opts)
{
    if (!j.is_object())
        fail("poles file must be an object with keys p1 / p2");
    const char *keys[2] = {"p1", "p2"};
    for (int l = 0; l < 2; ++l) {
        if (!j.contains(keys[l]))
            continue;
        const Json &list = j.at(keys[l]);
        if (!list.is_array())
            fail(std::string(keys[l]) + " must be an array");
        std::vector<PoleSpec> poles;
        for (const auto &p : list) {
            const int order = p.contains("order") ? integer(p.at("order"), "order") : opts.max_degree;
            if (order < 1)
                fail("pole order must be at least 1");
            poles.push_back({complex_from_json(field(p, "point")), order});
        }
        opts.poles[l] = std::move(poles);
    }
}

SlotApproximant slot_approximant_from_json(const Json &j)
{
    return guarded([&] {
        SlotApproximant r;
        r.center = complex_from_json(field(j, "center"));
        r.scale = number(field(j, "scale"), "scale");
        r.poly = point_list(field(j, "poly"), "poly");
        if (j.contains("poles")) {
            for (const auto &p : j.at("poles")) {
                PoleTerm t;
                t.location = complex_from_json(field(p, "location"));
                t.scale = number(field(p, "scale"), "scale");
                t.coeffs = point_list(field(p, "coeffs"), "coeffs");
                r.poles.push_back(std::move(t));
            }
        }
        if (!(r.scale > 0.0))
            fail("approximant scale must be positive");
        return r;
    });
}

Json to_json(const SlotApproximant &r)
{
    Json j;
    j["kind"] = r.is_polynomial() ? "polynomial" : "rational";
    j["center"] = to_json(r.center);
    j["scale"] = r.scale;
    j["poly"] = point_list_json(r.poly);
    Json poles = Json::array();
    for (const auto &p : r.poles) {
        Json pj;
        pj["location"] = to_json(p.location);
        pj["scale"] = p.scale;
        pj["order"] = p.order();
        pj["coeffs"] = point_list_json(p.coeffs);
        poles.push_back(std::move(pj));
    }
    j["poles"] = std::move(poles);
    return j;
}

BicomplexRational rational_from_json(const Json &j)
{
    const Json &a = j.contains("approximant") ? j.at("approximant") : j;
    return BicomplexRational{slot_approximant_from_json(field(a, "r1")), slot_approximant_from_json(field(a, "r2"))};
}

Json to_json(const BicomplexRational &r)
{
    Json j;
    j["r1"] = to_json(r.r1);
    j["r2"] = to_json(r.r2);
    return j;
}

const char *class_name(ComplementClass c)
{
    switch (c) {
    case ComplementClass::T1:
        return "T1";
    case ComplementClass::T2:
        return "T2";
    case ComplementClass::T3:
        return "T3";
    case ComplementClass::T4:
        return "T4";
    }
    return "?";
}

Json to_json(const ApproxReport &rep)
{
    Json j;
    j["class"] = class_name(rep.classification.cls);
    j["complement_components"] = {rep.classification.components[0], rep.classification.components[1]};
    j["eps"] = rep.eps;
    j["sup_error"] = to_json(rep.sup_error);
    j["achieved"] = rep.achieved;
    j["max_degree"] = rep.max_degree;
    j["seed"] = rep.seed;
    Json markers = Json::array();
    for (const auto &m : rep.pole_markers)
        markers.push_back(to_json(m));
    j["pole_markers"] = std::move(markers);
    Json slots = Json::array();
    for (int l = 0; l < 2; ++l) {
        const SlotReport &s = rep.slots[l];
        Json sj;
        sj["kind"] = s.rational ? "rational" : "polynomial";
        sj["degree"] = s.degree;
        Json poles = Json::array();
        for (const auto &p : s.poles) {
            Json pj;
            pj["point"] = to_json(p.location);
            pj["order"] = p.max_order;
            poles.push_back(std::move(pj));
        }
        sj["poles"] = std::move(poles);
        sj["sup_error"] = s.sup_error;
        sj["achieved"] = s.achieved;
        sj["min_denominator"] = rep.min_denominator[l];
        sj["samples"] = {{"fit_boundary", s.n_fit_boundary},
                         {"fit_interior", s.n_fit_interior},
                         {"validation_boundary", s.n_validation_boundary},
                         {"validation_interior", s.n_validation_interior}};
        if (!s.diagnostic.empty())
            sj["diagnostic"] = s.diagnostic;
        sj["trace"] = steps_json(s.trace);
        slots.push_back(std::move(sj));
    }
    j["slots"] = std::move(slots);
    return j;
}

Json to_json(const BieberbachResult &b)
{
    Json j;
    j["a2"] = to_json(b.a2);
    j["b3"] = to_json(b.b3);
    j["b5"] = to_json(b.b5);
    j["c0"] = to_json(b.c0);
    j["c1"] = to_json(b.c1);
    j["c1_norm"] = to_json(b.c1_norm);
    j["h_area_sum"] = to_json(b.h_area_sum);
    j["order_F"] = b.order_f;
    j["order_G"] = b.order_g;
    j["order_H"] = b.order_h;
    return j;
}

Json to_json(const CoveringResult &c)
{
    Json j;
    j["radius"] = c.radius;
    j["nsamples"] = c.nsamples;
    j["evaluation"] = c.evaluation == BoundaryEvaluation::pade ? "pade" : "direct";
    j["direct_min"] = to_json(c.direct_min);
    j["tail"] = to_json(c.tail);
    j["pade_type"] = {{c.pade_type[0][0], c.pade_type[0][1]}, {c.pade_type[1][0], c.pade_type[1][1]}};
    return j;
}

std::string dump(const Json &j)
{
    std::string out;
    write(out, j, 0);
    out += "\n";
    return out;
}

Json parse_text(const std::string &text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json load_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str());
}

void write_file(const std::string &path, const Json &j)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << dump(j);
}

} // namespace bc::io
