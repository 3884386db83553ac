#include "tgeo/ternary.hpp"

#include "tgeo/error.hpp"

namespace tgeo {
namespace {

Subspace meet_line_hyperplane(const Subspace& line, const Subspace& h, const char* what) {
    Subspace m = meet(line, h);
    if (m.rank() != 1) throw LatticeFault(std::string(what) + ": expected a point");
    return m;
}

Subspace join_points(const Subspace& p, const Subspace& q, const char* what) {
    Subspace l = join(p, q);
    if (l.rank() != 2) throw LatticeFault(std::string(what) + ": expected a line");
    return l;
}

void check_point(const Subspace& s, u32 p, u32 n, const char* name) {
    if (s.modulus() != p || s.ambient() != n)
        throw Precondition(std::string(name) + ": ambient mismatch");
    if (s.rank() != 1) throw Precondition(std::string(name) + ": expected a point");
}

} // namespace

void validate_ternary_inputs(const Subspace& x, const Subspace& y, const Subspace& z,
                             const Subspace& a, const Subspace& b) {
    const u32 p = a.modulus(), n = a.ambient();
    if (n < 3) throw Precondition("ternary operation needs projective dimension >= 2");
    if (a.rank() != n - 1) throw Precondition("a: expected a hyperplane");
    if (b.modulus() != p || b.ambient() != n || b.rank() != n - 1)
        throw Precondition("b: expected a hyperplane of the same space");
    check_point(x, p, n, "x");
    check_point(y, p, n, "y");
    check_point(z, p, n, "z");
    for (const auto* pt : {&x, &y, &z}) {
        if (pt->leq(a)) throw Precondition("ternary operand lies on a");
        if (pt->leq(b)) throw Precondition("ternary operand lies on b");
    }
}

bool collinear_triple(const Subspace& x, const Subspace& y, const Subspace& z) {
    return join(join(x, y), z).rank() <= 2;
}

Subspace ternary_lattice_generic(const Subspace& x, const Subspace& y, const Subspace& z,
                                 const Subspace& a, const Subspace& b) {
    validate_ternary_inputs(x, y, z, a, b);
    if (collinear_triple(x, y, z))
        throw Precondition("generic construction needs a non-collinear triple");
    Subspace l1 = join_points(x, y, "x|y");
    Subspace pa = meet_line_hyperplane(l1, a, "(x|y)&a");
    Subspace l2 = join_points(pa, z, "((x|y)&a)|z");
    Subspace l3 = join_points(z, y, "z|y");
    Subspace pb = meet_line_hyperplane(l3, b, "(z|y)&b");
    Subspace l4 = join_points(pb, x, "((z|y)&b)|x");
    if (l2 == l4) throw LatticeFault("generic construction: the two lines coincide");
    Subspace w = meet(l2, l4);
    if (w.rank() != 1) throw LatticeFault("generic construction: lines do not meet");
    return w;
}

Subspace select_u(const Subspace& x, const Subspace& y, const Subspace& a, const Subspace& b) {
    const u32 p = a.modulus(), n = a.ambient();
    Subspace line = join(x, y);
    for (const Vec& v : normalized_vectors(p, n)) {
        if (line.contains(v) || a.contains(v) || b.contains(v)) continue;
        return Subspace::span(p, n, {v});
    }
    throw Precondition("no admissible auxiliary point exists");
}

std::vector<Subspace> admissible_u(const Subspace& x, const Subspace& y,
                                   const Subspace& a, const Subspace& b) {
    const u32 p = a.modulus(), n = a.ambient();
    Subspace line = join(x, y);
    std::vector<Subspace> out;
    for (const Vec& v : normalized_vectors(p, n)) {
        if (line.contains(v) || a.contains(v) || b.contains(v)) continue;
        out.push_back(Subspace::span(p, n, {v}));
    }
    return out;
}

namespace {

void check_aux_point(const Subspace& u, const Subspace& line,
                     const Subspace& a, const Subspace& b) {
    check_point(u, a.modulus(), a.ambient(), "u");
    if (u.leq(line)) throw Precondition("u lies on the line of the triple");
    if (u.leq(a)) throw Precondition("u lies on a");
    if (u.leq(b)) throw Precondition("u lies on b");
}

// Collinear case with x != y.
Subspace collinear_main(const Subspace& x, const Subspace& y, const Subspace& z,
                        const Subspace& a, const Subspace& b,
                        const std::optional<Subspace>& u_opt) {
    Subspace line = join_points(x, y, "x|y");
    Subspace u = u_opt ? *u_opt : select_u(x, y, a, b);
    check_aux_point(u, line, a, b);

    Subspace qa = meet_line_hyperplane(line, a, "(x|y)&a");
    Subspace l1 = join_points(qa, u, "((x|y)&a)|u");
    Subspace qb = meet_line_hyperplane(join_points(u, y, "u|y"), b, "(u|y)&b");
    Subspace l2 = join_points(qb, x, "((u|y)&b)|x");
    if (l1 == l2) throw LatticeFault("collinear construction: auxiliary lines coincide");
    Subspace pt = meet(l1, l2);
    if (pt.rank() != 1) throw LatticeFault("collinear construction: no auxiliary point (x y u)");

    Subspace r = meet_line_hyperplane(join_points(z, u, "z|u"), b, "(z|u)&b");
    Subspace back = join_points(r, pt, "((z|u)&b)|(x y u)");
    Subspace w = meet(line, back);
    if (w.rank() != 1) throw LatticeFault("collinear construction: result is not a point");
    return w;
}

} // namespace

Subspace ternary_lattice_collinear(const Subspace& x, const Subspace& y, const Subspace& z,
                                   const Subspace& a, const Subspace& b,
                                   const std::optional<Subspace>& u) {
    validate_ternary_inputs(x, y, z, a, b);
    if (!collinear_triple(x, y, z))
        throw Precondition("collinear construction needs a collinear triple");
    if (x == y && y == z) return x;
    if (x != y) return collinear_main(x, y, z, a, b, u);
    // x == y != z: (x y z)_ab = (z y x)_ba
    return collinear_main(z, y, x, b, a, u);
}

Subspace ternary_lattice(const Subspace& x, const Subspace& y, const Subspace& z,
                         const Subspace& a, const Subspace& b,
                         const std::optional<Subspace>& u) {
    validate_ternary_inputs(x, y, z, a, b);
    if (collinear_triple(x, y, z)) return ternary_lattice_collinear(x, y, z, a, b, u);
    return ternary_lattice_generic(x, y, z, a, b);
}

Subspace ternary_collinear_two_step(const Subspace& x, const Subspace& y, const Subspace& z,
                                    const Subspace& a, const Subspace& b,
                                    const std::optional<Subspace>& u_opt) {
    validate_ternary_inputs(x, y, z, a, b);
    if (!collinear_triple(x, y, z))
        throw Precondition("two-step construction needs a collinear triple");
    if (x == y && y == z) return x;
    if (x == y) return ternary_collinear_two_step(z, y, x, b, a, u_opt);
    Subspace u = u_opt ? *u_opt : select_u(x, y, a, b);
    check_aux_point(u, join(x, y), a, b);
    Subspace pt = ternary_lattice_generic(x, y, u, a, b);
    return ternary_lattice_generic(pt, u, z, a, b);
}

} // namespace tgeo
