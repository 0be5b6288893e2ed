#include <bcapprox/cli.hpp>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include <bcapprox/errors.hpp>
#include <bcapprox/json_io.hpp>
#include <bcapprox/mergelyan.hpp>
#include <bcapprox/moebius.hpp>
#include <bcapprox/series.hpp>

namespace bc::cli
{

namespace
{

using io::Json;

// Bound checks tolerate rounding in the last bits; the Koebe bound is
// compared against a resummed boundary value and gets a looser margin.
constexpr double bound_slack = 1e-12;
constexpr double koebe_slack = 1e-9;

struct InputError : std::runtime_error {
    std::string kind;
    InputError(std::string k, const std::string &what) : std::runtime_error(what), kind(std::move(k)) {}
};

struct Config {
    std::string function_path, region_path, poles_path, series_path, out_path;
    std::string moebius_path, rational_path, at;
    double eps = 0.0;
    int max_degree = 40;
    bool polynomial_only = false;
    std::uint64_t seed = default_seed;
    int samples = 0;
    int order = 0;
    std::optional<double> radius;
    bool area = false, bieberbach = false, koebe = false;
};

void emit(const Config &cfg, const Json &report, std::ostream &out)
{
    if (cfg.out_path.empty())
        out << io::dump(report);
    else
        io::write_file(cfg.out_path, report);
}

int report_error(std::ostream &err, const std::string &kind, const std::string &message)
{
    Json e;
    e["error"] = {{"kind", kind}, {"message", message}};
    err << io::dump(e);
    return exit_input;
}

std::uint64_t env_seed(std::uint64_t fallback)
{
    const char *s = std::getenv("BCAPPROX_SEED");
    if (s == nullptr || *s == '\0')
        return fallback;
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        v = std::stoull(s, &used, 10);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != std::string(s).size())
        throw InputError("validation", std::string("BCAPPROX_SEED is not an unsigned integer: ") + s);
    return v;
}

ProductCompact load_compact(const std::string &path)
{
    const Json j = io::load_file(path);
    if (j.is_object() && j.contains("k1"))
        return io::compact_from_json(j);
    // A single region applies to both slots.
    const PlanarRegion r = io::region_from_json(j);
    return ProductCompact{r, r};
}

TruncatedSeries truncate(const TruncatedSeries &s, int order)
{
    if (order <= 0 || order == s.order())
        return s;
    if (order > s.order())
        throw InputError("validation", "--order " + std::to_string(order) + " exceeds the series order " +
                                           std::to_string(s.order()));
    const std::size_t keep = static_cast<std::size_t>(order) + (s.kind() == SeriesKind::power_f ? 1 : 2);
    std::vector<Bicomplex> c(s.coeffs().begin(), s.coeffs().begin() + static_cast<std::ptrdiff_t>(keep));
    return s.kind() == SeriesKind::power_f ? TruncatedSeries::power(std::move(c))
                                           : TruncatedSeries::laurent(std::move(c));
}

Json sampled_curve(const TruncatedSeries &g, double r, int n)
{
    Json slots = Json::array();
    for (int l = 0; l < 2; ++l) {
        Json pts = Json::array();
        for (int k = 0; k < n; ++k) {
            const double t = 2.0 * std::numbers::pi * k / n;
            const cplx z = std::polar(r, t);
            const Bicomplex w = series_eval(g, Bicomplex::idempotent(z, z));
            pts.push_back(io::to_json(w.slot(l)));
        }
        slots.push_back(std::move(pts));
    }
    return slots;
}

bool below(const Hyperbolic &v, const Hyperbolic &bound, double slack)
{
    return v.a1 <= bound.a1 * (1.0 + slack) && v.a2 <= bound.a2 * (1.0 + slack);
}

int cmd_approx(const Config &cfg, std::ostream &out)
{
    if (!(cfg.eps > 0.0) || !std::isfinite(cfg.eps))
        throw InputError("validation", "--eps must be a positive number");
    if (cfg.max_degree < 0)
        throw InputError("validation", "--max-degree must be non-negative");
    if (cfg.samples < 0 || (cfg.samples > 0 && cfg.samples < 8))
        throw InputError("validation", "--samples must be at least 8");

    const FunctionSpec f = io::function_from_json(io::load_file(cfg.function_path));
    const ProductCompact k = load_compact(cfg.region_path);

    ApproxOptions opts;
    opts.max_degree = cfg.max_degree;
    opts.polynomial_only = cfg.polynomial_only;
    opts.n_boundary = cfg.samples;
    opts.seed = cfg.seed;
    if (!cfg.poles_path.empty()) {
        if (cfg.polynomial_only)
            throw InputError("validation", "--poles and --polynomial-only are mutually exclusive");
        io::poles_from_json(io::load_file(cfg.poles_path), opts);
    }

    ApproxResult res;
    try {
        res = approximate(f, k, cfg.eps, opts);
    } catch (const PolePlacementError &e) {
        throw InputError("pole-placement", e.what());
    } catch (const GeometryError &e) {
        throw InputError("geometry", e.what());
    } catch (const DomainError &e) {
        throw InputError("domain", e.what());
    }

    Json report;
    report["command"] = "approx";
    Json body = io::to_json(res.report);
    for (auto it = body.begin(); it != body.end(); ++it)
        report[it.key()] = it.value();
    report["approximant"] = io::to_json(res.approximant);
    emit(cfg, report, out);
    return res.report.achieved ? exit_ok : exit_not_met;
}

int cmd_verify(const Config &cfg, std::ostream &out)
{
    const int chosen = int(cfg.area) + int(cfg.bieberbach) + int(cfg.koebe);
    if (chosen != 1)
        throw InputError("validation", "verify needs exactly one of --area, --bieberbach, --koebe");
    if (cfg.samples < 0)
        throw InputError("validation", "--samples must be positive");
    if (cfg.order < 0)
        throw InputError("validation", "--order must be positive");

    TruncatedSeries s = [&] {
        try {
            return truncate(io::series_from_json(io::load_file(cfg.series_path)), cfg.order);
        } catch (const InvalidRotationError &e) {
            throw InputError("validation", e.what());
        }
    }();

    Json report;
    report["command"] = "verify";
    bool holds = false;
    Json trace;

    if (cfg.bieberbach) {
        if (s.kind() != SeriesKind::power_f)
            throw InputError("validation", "--bieberbach needs a power-F series");
        if (s.order() < 2)
            throw InputError("validation", "--bieberbach needs a series of order at least 2");
        const BieberbachResult b = bieberbach_check(s);
        holds = b.holds;
        report["functional"] = "bieberbach";
        report["value"] = io::to_json(b.value);
        report["bound"] = io::to_json(b.bound);
        trace = io::to_json(b);
    } else if (cfg.koebe) {
        if (s.kind() != SeriesKind::power_f)
            throw InputError("validation", "--koebe needs a power-F series");
        const double r = cfg.radius.value_or(0.99);
        if (!(r > 0.0 && r < 1.0))
            throw InputError("validation", "--radius must lie in (0, 1) for --koebe");
        const int n = cfg.samples > 0 ? cfg.samples : 2048;
        const CoveringResult c = koebe_covering(s, r, n);
        const double bound = koebe_radius_bound(r);
        holds = c.value.a1 >= bound * (1.0 - koebe_slack) && c.value.a2 >= bound * (1.0 - koebe_slack);
        report["functional"] = "koebe";
        report["value"] = io::to_json(c.value);
        report["bound"] = io::to_json(Hyperbolic{bound, bound});
        trace = io::to_json(c);
    } else {
        const double r = cfg.radius.value_or(1.5);
        if (!(r > 1.0))
            throw InputError("validation", "--radius must exceed 1 for --area");
        TruncatedSeries g = s;
        trace = Json::object();
        if (s.kind() == SeriesKind::power_f) {
            const TruncatedSeries sq = sqrt_transform(s);
            g = inversion_transform(sq);
            trace["sqrt_order"] = sq.order();
            trace["laurent"] = io::to_json(g);
        }
        const Hyperbolic value = gronwall_area_sum(g);
        const Hyperbolic unit{1.0, 1.0};
        holds = below(value, unit, bound_slack);
        const int n = cfg.samples > 0 ? cfg.samples : std::max(1024, 4 * g.order());
        if (n < 4 * g.order())
            throw InputError("validation", "--samples must be at least 4 N for --area");
        const Hyperbolic contour = area_contour_estimate(g, r, n);
        const Hyperbolic closed = area_closed_form(g, r);
        trace["radius"] = r;
        trace["nsamples"] = n;
        trace["area_contour"] = io::to_json(contour);
        trace["area_closed_form"] = io::to_json(closed);
        trace["disk_area"] = std::numbers::pi * r * r;
        trace["curve"] = sampled_curve(g, r, 128);
        report["functional"] = "area";
        report["value"] = io::to_json(value);
        report["bound"] = io::to_json(unit);
    }
    report["holds"] = holds;
    report["trace"] = std::move(trace);
    emit(cfg, report, out);
    return holds ? exit_ok : exit_not_met;
}

ExtendedBicomplex parse_point(const std::string &text)
{
    Json j;
    try {
        j = io::parse_text(text);
    } catch (const ParseError &) {
        throw InputError("parse", "--at is not a JSON point: " + text);
    }
    return io::extended_from_json(j);
}

int cmd_eval(const Config &cfg, std::ostream &out)
{
    const int chosen = int(!cfg.moebius_path.empty()) + int(!cfg.series_path.empty()) + int(!cfg.rational_path.empty());
    if (chosen != 1)
        throw InputError("validation", "eval needs exactly one of --moebius, --series, --rational");

    const ExtendedBicomplex at = parse_point(cfg.at);
    Json report;
    report["command"] = "eval";
    report["at"] = io::to_json(at);
    try {
        if (!cfg.moebius_path.empty()) {
            MoebiusMap m = [&] {
                try {
                    return io::moebius_from_json(io::load_file(cfg.moebius_path));
                } catch (const DegenerateMapError &e) {
                    throw InputError("validation", e.what());
                }
            }();
            report["value"] = io::to_json(m(at));
        } else {
            if (!at.is_finite())
                throw InputError("validation", "--at must be finite for series and rational evaluation");
            const Bicomplex z = at.finite_value();
            if (!cfg.series_path.empty()) {
                const TruncatedSeries s = io::series_from_json(io::load_file(cfg.series_path));
                report["value"] = io::to_json(series_eval(s, z));
            } else {
                const BicomplexRational r = io::rational_from_json(io::load_file(cfg.rational_path));
                report["value"] = io::to_json(r(z));
            }
        }
    } catch (const NullConeError &e) {
        report["value"] = nullptr;
        report["error"] = {{"kind", "null-cone"}, {"message", e.what()}};
        emit(cfg, report, out);
        return exit_not_met;
    }
    emit(cfg, report, out);
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Bicomplex approximation and univalent-function checks", "bcapprox"};
    app.require_subcommand(1);
    Config cfg;

    auto *approx = app.add_subcommand("approx", "Approximate F on K1 x K2 by a bicomplex rational function");
    approx->add_option("--function", cfg.function_path, "Function JSON {f1, f2}")->required();
    approx->add_option("--region", cfg.region_path, "Region JSON {k1, k2} or a single region")->required();
    approx->add_option("--eps", cfg.eps, "Target sup error per slot")->required();
    approx->add_option("--max-degree", cfg.max_degree, "Degree budget per slot");
    approx->add_option("--poles", cfg.poles_path, "Pole JSON {p1: [...], p2: [...]}");
    approx->add_flag("--polynomial-only", cfg.polynomial_only, "Forbid poles in every slot");
    approx->add_option("--samples", cfg.samples, "Boundary fitting samples per slot");
    approx->add_option("--seed", cfg.seed, "Sampling seed");
    approx->add_option("--out", cfg.out_path, "Report path");

    auto *verify = app.add_subcommand("verify", "Evaluate a univalent-function functional against its bound");
    verify->add_option("--series", cfg.series_path, "Series JSON")->required();
    verify->add_flag("--area", cfg.area, "Area theorem");
    verify->add_flag("--bieberbach", cfg.bieberbach, "Second-coefficient bound");
    verify->add_flag("--koebe", cfg.koebe, "Covering bound on |Z| = r");
    verify->add_option("--radius", cfg.radius, "Circle radius");
    verify->add_option("--samples", cfg.samples, "Samples on the circle");
    verify->add_option("--order", cfg.order, "Truncate the series to order N");
    verify->add_option("--seed", cfg.seed, "Unused; accepted for uniformity");
    verify->add_option("--out", cfg.out_path, "Report path");

    auto *eval = app.add_subcommand("eval", "Evaluate a Moebius map, series or rational approximant at a point");
    eval->add_option("--moebius", cfg.moebius_path, "Moebius JSON {A, B, C, D}");
    eval->add_option("--series", cfg.series_path, "Series JSON");
    eval->add_option("--rational", cfg.rational_path, "Approximant JSON or approx report");
    eval->add_option("--at", cfg.at, "Point: number, [re, im], {b1, b2} or {z1, z2}")->required();
    eval->add_option("--out", cfg.out_path, "Output path");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        return report_error(err, "usage", e.what());
    }

    try {
        cfg.seed = env_seed(cfg.seed);
        if (approx->parsed())
            return cmd_approx(cfg, out);
        if (verify->parsed())
            return cmd_verify(cfg, out);
        return cmd_eval(cfg, out);
    } catch (const InputError &e) {
        return report_error(err, e.kind, e.what());
    } catch (const ParseError &e) {
        return report_error(err, "parse", e.what());
    } catch (const std::invalid_argument &e) {
        return report_error(err, "validation", e.what());
    } catch (const std::domain_error &e) {
        return report_error(err, "domain", e.what());
    } catch (const std::runtime_error &e) {
        return report_error(err, "io", e.what());
    }
}

} // namespace bc::cli
