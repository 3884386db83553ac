#pragma once

#include "tgeo/json_io.hpp"

#include <optional>

namespace tgeo {

// Declarative law-check runs. Input:
//
// {
//   "schema": 1,
//   "name": "...",
//   "seed": 20260815,
//   "trials": 10000,
//   "items": [
//     {
//       "name": "...",
//       "structure": {"type": "zmod", "n": 12}
//                  | {"type": "table", "n": N, "values": [N^3 entries],
//                     "labels": [...], "name": "..."}
//                  | {"type": "plane", "p": 3, "a": 0, "b": 1}
//                  | {"type": "plane_all_pairs", "p": 3}
//                  | {"type": "chart", "kind": "octonion", "m": 2,
//                     "beta": "pr1" | "zero" | [scalar, ...]}
//                  | {"type": "units", "kind": "octonion"},
//       "laws": ["T0", {"law": "T1", "expect": "fail"}, ...],
//       "origins": [element, ...],
//       "trials": 2000,
//       "exhaustive_cap": 200000,   (optional: largest tuple count to exhaust)
//       "structured_cap": 1000,     (optional: cap on structured-first tuples)
//       "note": "..."
//     }
//   ]
// }
//
// Law names: T0 T1 MT0 MT1 MT2 MT1m MT2m beta_hom, bundles torsor
// (T0+T1), MT (MT0-MT2), MTm (MT0+MT1m+MT2m); per origin: suite (the
// binary Moufang suite), chain (the ternary<->binary identities),
// roundtrip, commutative, associative. Origins are table indices, chart
// points, or unit scalars to match the structure; when omitted, one
// canonical origin is used. "expect" defaults to "pass"; an item is ok
// when every report matches its expectation, and expected failures are
// re-validated on their recorded witnesses.
//
// Output mirrors the input shape with one report per law actually run,
// each carrying "expect" and "ok"; top-level "ok" is the conjunction.
// Output is deterministic byte-for-byte for a fixed input.

struct ScenarioResult {
    Json output;
    bool ok = false;
};

ScenarioResult run_scenario(const Json& input, std::optional<u64> seed_override = std::nullopt,
                            std::optional<u64> trials_override = std::nullopt);

// Single inline item: {"structure": ..., "laws": [...], ...}. Wraps it in a
// one-item scenario.
ScenarioResult run_laws_item(const Json& item, std::optional<u64> seed_override = std::nullopt,
                             std::optional<u64> trials_override = std::nullopt);

// One-shot JSON evaluators shared by the CLI and the python layer.
//
// ternary_eval_json input:
//   {"geometry": "lattice", "a": SUB, "b": SUB, "x": SUB, "y": SUB, "z": SUB,
//    "u": SUB?}                      -> {"w": SUB, "collinear": bool,
//                                        "two_step_agrees"?, "chart"?}
//   {"geometry": "chart", "kind": .., "m": .., "beta": ..,
//    "x": PT, "y": PT, "z": PT}      -> {"w": PT, "beta_w"?}
// The lattice form cross-checks the chart route whenever a, b are hyperplanes
// and x, y, z are points; the collinear case cross-checks the two-step route.
Json ternary_eval_json(const Json& in);

// gamma_eval_json input {"x","a","y","b","z","u"?} plus a method:
//   ""          both witness-set and lattice routes, compared, with the
//               position predicates
//   "brute"     witness-set definition only
//   "lattice"   lattice expression only
//   "collinear" part2 (and part3 + agreement when shapes allow); needs "u"
Json gamma_eval_json(const Json& in, const std::string& method);

} // namespace tgeo
