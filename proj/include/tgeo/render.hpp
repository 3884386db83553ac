#pragma once

#include "tgeo/chart.hpp"

#include <string>

namespace tgeo {

// SVG figure of the two-line construction computing (x y z) in the rational
// plane chart with beta = first coordinate: the line through z parallel to
// x|y (their meeting point P lies on a) crossed with the line joining x to
// Q = (z|y) & b. Every coordinate is exact until the final print (six
// decimal places, emitted only here).
//
// view picks which of the two distinguished lines sits at infinity:
//   "a"    the chart itself; a invisible, parallelism encodes P
//   "b"    b sent to infinity, a drawn as the vertical axis
//   "none" both a and b visible (unit-sum normalization)
// Points that the chosen view sends to infinity raise Precondition; the
// auxiliary markers P and Q are simply dropped when not visible.
//
// coincident draws the b == a chart instead: Q moves onto a, both crossed
// lines become parallels, and w closes a true parallelogram on y, x, z.
// beta plays no role there, so the first coordinates are unconstrained and
// view "b" is rejected.
struct RenderSpec {
    ChartPoint x, y, z;     // rational kind, two coordinates, beta != 0
    std::string view = "none";
    bool coincident = false;
    int width = 640;
    int height = 480;
};

struct RenderResult {
    std::string svg;
    ChartPoint w; // the computed ternary value
};

RenderResult render_construction(const RenderSpec& spec);

// A pleasant non-collinear default input for the bundled figure.
RenderSpec default_render_spec();

} // namespace tgeo
