#ifndef BCAPPROX_JSON_IO_HPP
#define BCAPPROX_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <bcapprox/bicomplex.hpp>
#include <bcapprox/expression.hpp>
#include <bcapprox/mergelyan.hpp>
#include <bcapprox/moebius.hpp>
#include <bcapprox/region.hpp>
#include <bcapprox/series.hpp>

namespace bc::io
{

using Json = nlohmann::ordered_json;

// Every reader throws ParseError on malformed or out-of-schema input
// (including GeometryError/DomainError raised while building the object).

// Complex: [re, im] or a bare real number.
cplx complex_from_json(const Json &j);
Json to_json(cplx z);

// Bicomplex: {"b1": c, "b2": c} (idempotent) or {"z1": c, "z2": c}
// (cartesian), or a bare real number. Writers emit the idempotent form.
Bicomplex bicomplex_from_json(const Json &j);
Json to_json(const Bicomplex &z);

// Extended slots are a complex value or the string "inf".
ExtendedBicomplex extended_from_json(const Json &j);
Json to_json(const ExtendedBicomplex &z);

Json to_json(const Hyperbolic &h);

// {"A": ..., "B": ..., "C": ..., "D": ...}
MoebiusMap moebius_from_json(const Json &j);
Json to_json(const MoebiusMap &m);

// {"kind": "power-F" | "laurent-Sigma", "N": n, "coeffs": [...]}
TruncatedSeries series_from_json(const Json &j);
Json to_json(const TruncatedSeries &s);

// {"shape": "disk", "center": [x, y], "radius": r}
// {"shape": "annulus", "center": [x, y], "r_in": a, "r_out": b}
// {"shape": "polygon", "vertices": [[x, y], ...]}
// {"shape": "polygon-with-holes", "outer": [...], "holes": [[...], ...]}
PlanarRegion region_from_json(const Json &j);
Json to_json(const PlanarRegion &r);

// {"k1": region, "k2": region}
ProductCompact compact_from_json(const Json &j);

// Expression tree: a number or [re, im] is a constant, "z" the variable, or
// {"op": "const" | "var" | "add" | "sub" | "neg" | "mul" | "div" | "pow" | "exp" | "compose",
//  "args": [...], "value": c, "exponent": n, "poles": [c, ...]}.
// add/mul accept two or more args; sub takes two (one means negation).
Expression expression_from_json(const Json &j);
Json to_json(const Expression &e);

// {"f1": expr, "f2": expr}
FunctionSpec function_from_json(const Json &j);
Json to_json(const FunctionSpec &f);

// {"p1": [{"point": c, "order": m}, ...], "p2": [...]}; absent keys stay unset.
void poles_from_json(const Json &j, ApproxOptions &opts);

SlotApproximant slot_approximant_from_json(const Json &j);
Json to_json(const SlotApproximant &r);
BicomplexRational rational_from_json(const Json &j);
Json to_json(const BicomplexRational &r);

Json to_json(const ApproxReport &rep);
Json to_json(const BieberbachResult &b);
Json to_json(const CoveringResult &c);

// Pretty-printed JSON with doubles written as %.17g (non-finite as null).
std::string dump(const Json &j);

Json parse_text(const std::string &text);
Json load_file(const std::string &path);
void write_file(const std::string &path, const Json &j);

const char *class_name(ComplementClass c);

} // namespace bc::io

#endif
