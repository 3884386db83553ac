#pragma once

#include "tgeo/chart.hpp"
#include "tgeo/laws.hpp"
#include "tgeo/scalar.hpp"
#include "tgeo/subspace.hpp"

#include <json.hpp>

#include <string>

namespace tgeo {

using Json = nlohmann::json;

// JSON forms, shared by scenario files, CLI output and the python layer:
//   kind      "rational" | "octonion" | "gf:7" | {"scalar": "gf", "p": 7}
//   scalar    GF: {"gf": p, "val": k} or bare int (kind gives p)
//             rational: "n/d" or bare int
//             octonion: array of 8 rationals; bare rational means q e0
//   point     array of m scalars
//   subspace  {"p": p, "n": n, "rows": [[...], ...]} (rows are generators;
//             output rows are the canonical echelon basis)
// Emitters always produce the explicit forms; parsers accept the shorthands.
// Everything stays integral/textual, so dumps are byte-stable.

Json kind_to_json(const ScalarKind& k);
ScalarKind kind_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const ScalarKind& kind);

Json point_to_json(const ChartPoint& x);
ChartPoint point_from_json(const Json& j, const ScalarKind& kind, u32 m);

Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

Json report_to_json(const CheckReport& r);

// Parse with context in error messages; ParseError on bad syntax.
Json parse_json_text(const std::string& text, const std::string& what);
Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Two-space indent, sorted keys, trailing newline: the one dump format.
std::string json_dump(const Json& j);

} // namespace tgeo
