#include "tgeo/plane_model.hpp"

#include "tgeo/error.hpp"

namespace tgeo {

PlaneModel::PlaneModel(u32 p) : p_(p) {
    ProjectiveSpace pg(p, 3);
    pts_ = pg.points();
    lns_ = pg.hyperplanes();
    const size_t np = pts_.size(), nl = lns_.size();
    for (size_t i = 0; i < np; ++i) pt_idx_[pts_[i].key()] = static_cast<int>(i);
    for (size_t l = 0; l < nl; ++l) ln_idx_[lns_[l].key()] = static_cast<int>(l);

    on_.assign(np * nl, 0);
    std::vector<Vec> normals;
    normals.reserve(nl);
    for (const Subspace& ln : lns_) normals.push_back(normal_of_hyperplane(ln));
    for (size_t i = 0; i < np; ++i) {
        const Vec& rep = pts_[i].representative();
        for (size_t l = 0; l < nl; ++l)
            if (dot(normals[l], rep, p_) == 0) on_[i * nl + l] = 1;
    }

    lt_.assign(np * np, -1);
    for (size_t l = 0; l < nl; ++l) {
        std::vector<size_t> pl;
        for (size_t i = 0; i < np; ++i)
            if (on_[i * nl + l]) pl.push_back(i);
        for (size_t i : pl)
            for (size_t j : pl)
                if (i != j) lt_[i * np + j] = static_cast<int>(l);
    }

    lm_.assign(nl * nl, -1);
    for (size_t i = 0; i < np; ++i) {
        std::vector<size_t> li;
        for (size_t l = 0; l < nl; ++l)
            if (on_[i * nl + l]) li.push_back(l);
        for (size_t l : li)
            for (size_t m : li)
                if (l != m) lm_[l * nl + m] = static_cast<int>(i);
    }
}

int PlaneModel::point_index(const Subspace& pt) const {
    auto it = pt_idx_.find(pt.key());
    if (it == pt_idx_.end()) throw Precondition("not a point of this plane");
    return it->second;
}

int PlaneModel::line_index(const Subspace& ln) const {
    auto it = ln_idx_.find(ln.key());
    if (it == ln_idx_.end()) throw Precondition("not a line of this plane");
    return it->second;
}

int PlaneModel::line_through(int p1, int p2) const {
    if (p1 == p2) throw Precondition("line_through needs distinct points");
    return lt_[static_cast<size_t>(p1) * pts_.size() + p2];
}

int PlaneModel::lines_meet(int l1, int l2) const {
    if (l1 == l2) throw Precondition("lines_meet needs distinct lines");
    return lm_[static_cast<size_t>(l1) * lns_.size() + l2];
}

bool PlaneModel::collinear3(int x, int y, int z) const {
    if (x == y || y == z || x == z) return true;
    return on(z, line_through(x, y));
}

std::vector<int> PlaneModel::carrier(int a, int b) const {
    std::vector<int> out;
    for (int i = 0; i < npoints(); ++i)
        if (!on(i, a) && !on(i, b)) out.push_back(i);
    return out;
}

int PlaneModel::select_u(int x, int y, int a, int b) const {
    const int line = line_through(x, y);
    for (int u = 0; u < npoints(); ++u)
        if (!on(u, line) && !on(u, a) && !on(u, b)) return u;
    throw Precondition("no admissible auxiliary point exists");
}

void PlaneModel::require_operand(int pt, int a, int b) const {
    if (pt < 0 || pt >= npoints()) throw Precondition("point index out of range");
    if (on(pt, a) || on(pt, b)) throw Precondition("ternary operand lies on a or b");
}

int PlaneModel::ternary_generic(int x, int y, int z, int a, int b) const {
    require_operand(x, a, b);
    require_operand(y, a, b);
    require_operand(z, a, b);
    if (collinear3(x, y, z)) throw Precondition("generic construction needs a non-collinear triple");
    int l1 = line_through(x, y);
    int pa = lines_meet(l1, a);
    int l2 = line_through(pa, z);
    int pb = lines_meet(line_through(z, y), b);
    int l4 = line_through(pb, x);
    if (l2 == l4) throw LatticeFault("generic construction: the two lines coincide");
    return lines_meet(l2, l4);
}

int PlaneModel::collinear_main(int x, int y, int z, int a, int b, int u) const {
    const int line = line_through(x, y);
    if (u < 0) u = select_u(x, y, a, b);
    if (u >= npoints()) throw Precondition("point index out of range");
    if (on(u, line)) throw Precondition("u lies on the line of the triple");
    if (on(u, a)) throw Precondition("u lies on a");
    if (on(u, b)) throw Precondition("u lies on b");

    int qa = lines_meet(line, a);
    int l1 = line_through(qa, u);
    int qb = lines_meet(line_through(u, y), b);
    int l2 = line_through(qb, x);
    if (l1 == l2) throw LatticeFault("collinear construction: auxiliary lines coincide");
    int pt = lines_meet(l1, l2);

    int r = lines_meet(line_through(z, u), b);
    if (r == pt) throw LatticeFault("collinear construction: degenerate back line");
    int back = line_through(r, pt);
    if (back == line) throw LatticeFault("collinear construction: result is not a point");
    return lines_meet(line, back);
}

int PlaneModel::ternary_collinear(int x, int y, int z, int a, int b, int u) const {
    require_operand(x, a, b);
    require_operand(y, a, b);
    require_operand(z, a, b);
    if (!collinear3(x, y, z)) throw Precondition("collinear construction needs a collinear triple");
    if (x == y && y == z) return x;
    if (x != y) return collinear_main(x, y, z, a, b, u);
    return collinear_main(z, y, x, b, a, u);
}

int PlaneModel::ternary(int x, int y, int z, int a, int b, int u) const {
    require_operand(x, a, b);
    require_operand(y, a, b);
    require_operand(z, a, b);
    if (collinear3(x, y, z)) return ternary_collinear(x, y, z, a, b, u);
    return ternary_generic(x, y, z, a, b);
}

} // namespace tgeo
