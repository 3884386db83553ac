#include "tgeo/render.hpp"

#include "tgeo/error.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <sstream>
#include <vector>

namespace tgeo {

namespace {

using Q = Rational;
using PVec = std::array<Q, 3>; // projective triple (X0 : X1 : X2) over Q

PVec cross(const PVec& a, const PVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero(const PVec& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

Q dot(const PVec& a, const PVec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

struct Affine {
    Q u, v;
};

// The three views as affine charts of the rational projective plane. Each
// returns nullopt for points on its line at infinity, and turns the line
// c . X = 0 into alpha u + beta v + gamma = 0.
struct View {
    std::string name;

    std::optional<Affine> point(const PVec& x) const {
        Q d = denom(x);
        if (d == 0)
            return std::nullopt;
        PVec n = numer(x);
        return Affine{n[0] / d, n[1] / d};
    }

    std::array<Q, 3> line(const PVec& c) const {
        if (name == "a")
            return {c[1], c[2], c[0]};
        if (name == "b")
            return {c[0], c[2], c[1]};
        return {c[0] - c[2], c[1] - c[2], c[2]};
    }

    bool line_at_infinity(const PVec& c) const {
        auto l = line(c);
        return l[0] == 0 && l[1] == 0;
    }

private:
    Q denom(const PVec& x) const {
        if (name == "a")
            return x[0];
        if (name == "b")
            return x[1];
        return x[0] + x[1] + x[2];
    }
    PVec numer(const PVec& x) const {
        if (name == "a")
            return {x[1], x[2], Q(0)};
        if (name == "b")
            return {x[0], x[2], Q(0)};
        return {x[0], x[1], Q(0)};
    }
};

struct Box {
    Q lo_u, hi_u, lo_v, hi_v;
};

// Exact clipping of alpha u + beta v + gamma = 0 to the box; the chord's two
// endpoints, if the line crosses it.
std::optional<std::pair<Affine, Affine>> clip_line(const std::array<Q, 3>& l, const Box& box) {
    const Q &al = l[0], &be = l[1], &ga = l[2];
    if (al == 0 && be == 0)
        return std::nullopt;
    std::vector<Affine> hits;
    auto push_unique = [&](const Affine& pt) {
        for (const auto& h : hits)
            if (h.u == pt.u && h.v == pt.v)
                return;
        hits.push_back(pt);
    };
    if (be != 0) { // v = -(al u + ga)/be on the two vertical box edges
        for (const Q& u : {box.lo_u, box.hi_u}) {
            Q v = -(al * u + ga) / be;
            if (v >= box.lo_v && v <= box.hi_v)
                push_unique({u, v});
        }
    }
    if (al != 0) {
        for (const Q& v : {box.lo_v, box.hi_v}) {
            Q u = -(be * v + ga) / al;
            if (u >= box.lo_u && u <= box.hi_u)
                push_unique({u, v});
        }
    }
    if (hits.size() < 2)
        return std::nullopt;
    return std::make_pair(hits[0], hits[1]);
}

std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", x);
    return buf;
}

class Svg {
public:
    Svg(int w, int h, const Box& box) : w_(w), h_(h), box_(box) {}

    std::pair<double, double> map(const Affine& p) const {
        double su = ratio(p.u - box_.lo_u, box_.hi_u - box_.lo_u) * w_;
        double sv = (1.0 - ratio(p.v - box_.lo_v, box_.hi_v - box_.lo_v)) * h_;
        return {su, sv};
    }

    void line(const Affine& p, const Affine& q, const std::string& style) {
        auto [x1, y1] = map(p);
        auto [x2, y2] = map(q);
        body_ << "  <line x1=\"" << fmt(x1) << "\" y1=\"" << fmt(y1) << "\" x2=\"" << fmt(x2)
              << "\" y2=\"" << fmt(y2) << "\" " << style << "/>\n";
    }

    void dot(const Affine& p, const std::string& fill, const std::string& label) {
        auto [cx, cy] = map(p);
        body_ << "  <circle cx=\"" << fmt(cx) << "\" cy=\"" << fmt(cy)
              << "\" r=\"4\" fill=\"" << fill << "\"/>\n";
        text_at(cx + 7, cy - 7, 14, fill, label);
    }

    void label_line(const Affine& p, const std::string& color, const std::string& text) {
        auto [cx, cy] = map(p);
        text_at(cx + 5, cy + 15, 13, color, text);
    }

    // clamped into the canvas so labels of clipped lines stay visible
    void text_at(double x, double y, int size, const std::string& color, const std::string& s) {
        x = std::max(std::min(x, w_ - 9.0 * static_cast<double>(s.size())), 4.0);
        y = std::max(std::min(y, h_ - 4.0), static_cast<double>(size) + 2.0);
        body_ << "  <text x=\"" << fmt(x) << "\" y=\"" << fmt(y)
              << "\" font-family=\"sans-serif\" font-size=\"" << size << "\" fill=\"" << color
              << "\">" << s << "</text>\n";
    }

    std::string finish() const {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w_ << "\" height=\""
            << h_ << "\" viewBox=\"0 0 " << w_ << " " << h_ << "\">\n";
        out << "  <rect width=\"" << w_ << "\" height=\"" << h_ << "\" fill=\"white\"/>\n";
        out << body_.str();
        out << "</svg>\n";
        return out.str();
    }

private:
    static double ratio(const Q& num, const Q& den) { return rational_double(num / den); }
    int w_, h_;
    Box box_;
    std::ostringstream body_;
};

PVec projectivize(const ChartPoint& x) {
    return {Q(1), x.coords[0].rat_val(), x.coords[1].rat_val()};
}

void require_input(const ChartPoint& x, const char* tag, bool coincident) {
    if (x.coords.size() != 2)
        throw Precondition(std::string("render: ") + tag + " needs exactly 2 coordinates");
    for (const auto& c : x.coords)
        if (c.kind() != ScalarKind::rat())
            throw Precondition(std::string("render: ") + tag + " must be rational");
    if (!coincident && x.coords[0].is_zero())
        throw Precondition(std::string("render: ") + tag + " lies on b (first coordinate 0)");
}

} // namespace

RenderResult render_construction(const RenderSpec& spec) {
    if (spec.view != "a" && spec.view != "b" && spec.view != "none")
        throw Precondition("render: view must be \"a\", \"b\" or \"none\"");
    if (spec.coincident && spec.view == "b")
        throw Precondition("render: b coincides with a; use view \"a\" or \"none\"");
    if (spec.width < 64 || spec.height < 64 || spec.width > 4096 || spec.height > 4096)
        throw Precondition("render: size out of range");
    require_input(spec.x, "x", spec.coincident);
    require_input(spec.y, "y", spec.coincident);
    require_input(spec.z, "z", spec.coincident);

    ChartConfig cfg = spec.coincident ? ChartConfig::coincident(ScalarKind::rat(), 2)
                                      : ChartConfig::pr1(ScalarKind::rat(), 2);
    ChartPoint w = chart_formula(spec.x, spec.y, spec.z, cfg);

    PVec X = projectivize(spec.x), Y = projectivize(spec.y), Z = projectivize(spec.z);
    PVec a_line = {Q(1), Q(0), Q(0)}; // X0 = 0, the chart's line at infinity
    PVec b_line = spec.coincident ? a_line : PVec{Q(0), Q(1), Q(0)};

    PVec l_xy = cross(X, Y);
    PVec l_zy = cross(Z, Y);
    if (is_zero(l_xy))
        throw Precondition("render: x and y coincide");
    if (is_zero(l_zy))
        throw Precondition("render: z and y coincide");
    if (dot(l_xy, Z) == 0)
        throw Precondition("render: x, y, z are collinear; the generic figure needs a triangle");

    PVec P = cross(l_xy, a_line); // direction of x|y
    PVec Qpt = cross(l_zy, b_line);
    PVec L1 = cross(P, Z);
    PVec L2 = cross(Qpt, X);
    PVec W = cross(L1, L2);
    if (W[0] == 0)
        throw LatticeFault("render: construction point escaped the chart");

    // independent route must agree with the closed formula
    ChartPoint w_geo;
    w_geo.coords = {Scalar::rat(W[1] / W[0]), Scalar::rat(W[2] / W[0])};
    if (!(w_geo == w))
        throw LatticeFault("render: line construction disagrees with the chart formula");

    View view{spec.view};
    auto need = [&](const PVec& pt, const char* tag) {
        auto av = view.point(pt);
        if (!av)
            throw Precondition(std::string("render: ") + tag +
                               " is at infinity in view \"" + spec.view + "\"; pick another view");
        return *av;
    };
    Affine vx = need(X, "x"), vy = need(Y, "y"), vz = need(Z, "z"), vw = need(W, "w");
    std::optional<Affine> vP = view.point(P), vQ = view.point(Qpt);

    std::vector<Affine> anchor = {vx, vy, vz, vw};
    if (vP)
        anchor.push_back(*vP);
    if (vQ)
        anchor.push_back(*vQ);
    Box box{anchor[0].u, anchor[0].u, anchor[0].v, anchor[0].v};
    for (const auto& pt : anchor) {
        box.lo_u = std::min(box.lo_u, pt.u);
        box.hi_u = std::max(box.hi_u, pt.u);
        box.lo_v = std::min(box.lo_v, pt.v);
        box.hi_v = std::max(box.hi_v, pt.v);
    }
    Q pad_u = (box.hi_u - box.lo_u) / 4, pad_v = (box.hi_v - box.lo_v) / 4;
    if (pad_u == 0)
        pad_u = 1;
    if (pad_v == 0)
        pad_v = 1;
    box.lo_u -= pad_u;
    box.hi_u += pad_u;
    box.lo_v -= pad_v;
    box.hi_v += pad_v;

    Svg svg(spec.width, spec.height, box);
    auto draw = [&](const PVec& c, const std::string& style, const std::string& color,
                    const std::string& text) {
        if (view.line_at_infinity(c))
            return;
        auto seg = clip_line(view.line(c), box);
        if (!seg)
            return;
        svg.line(seg->first, seg->second, style);
        if (!text.empty())
            svg.label_line(seg->first, color, text);
    };

    const std::string grey = "stroke=\"#999999\" stroke-width=\"1\" stroke-dasharray=\"6 4\"";
    const std::string helper = "stroke=\"#bbbbbb\" stroke-width=\"1\"";
    const std::string blue = "stroke=\"#3366cc\" stroke-width=\"2\"";
    const std::string green = "stroke=\"#339966\" stroke-width=\"2\"";

    draw(a_line, grey, "#999999", spec.coincident ? "a = b" : "a");
    if (!spec.coincident)
        draw(b_line, grey, "#999999", "b");
    draw(l_xy, helper, "", "");
    draw(l_zy, helper, "", "");
    draw(L1, blue, "#3366cc", "z + dir(x,y)");
    draw(L2, green, "#339966", spec.coincident ? "x + dir(z,y)" : "x | (z,y) on b");

    svg.dot(vx, "#222222", "x");
    svg.dot(vy, "#222222", "y");
    svg.dot(vz, "#222222", "z");
    svg.dot(vw, "#cc3333", "(x y z)");
    if (vP)
        svg.dot(*vP, "#3366cc", "P");
    if (vQ)
        svg.dot(*vQ, "#339966", "Q");

    return {svg.finish(), w};
}

RenderSpec default_render_spec() {
    RenderSpec spec;
    auto pt = [](int u1, int d1, int u2, int d2) {
        ChartPoint p;
        p.coords = {Scalar::rat(Q(u1, d1)), Scalar::rat(Q(u2, d2))};
        return p;
    };
    spec.x = pt(3, 1, 2, 1);
    spec.y = pt(1, 1, 1, 1);
    spec.z = pt(2, 1, -1, 1);
    return spec;
}

} // namespace tgeo
