#pragma once

#include "tgeo/subspace.hpp"

#include <map>
#include <string>
#include <vector>

namespace tgeo {

// Index tables for PG(2, p): joins of points, meets of lines and incidence,
// precomputed once from the subspace lattice so exhaustive sweeps run on
// small integers instead of matrices. 16-bit indices cap p well above the
// primes used here.
class PlaneModel {
public:
    explicit PlaneModel(u32 p);

    u32 p() const { return p_; }
    int npoints() const { return static_cast<int>(pts_.size()); }
    int nlines() const { return static_cast<int>(lns_.size()); }
    const std::vector<Subspace>& points() const { return pts_; }
    const std::vector<Subspace>& lines() const { return lns_; }
    int point_index(const Subspace& pt) const;
    int line_index(const Subspace& ln) const;

    bool on(int pt, int ln) const { return on_[static_cast<size_t>(pt) * lns_.size() + ln] != 0; }
    int line_through(int p1, int p2) const; // p1 != p2
    int lines_meet(int l1, int l2) const;   // l1 != l2
    bool collinear3(int x, int y, int z) const;

    std::vector<int> carrier(int a, int b) const; // points off both lines
    int select_u(int x, int y, int a, int b) const;

    int ternary(int x, int y, int z, int a, int b, int u = -1) const;
    int ternary_generic(int x, int y, int z, int a, int b) const;
    int ternary_collinear(int x, int y, int z, int a, int b, int u = -1) const;

private:
    void require_operand(int pt, int a, int b) const;
    int collinear_main(int x, int y, int z, int a, int b, int u) const;

    u32 p_;
    std::vector<Subspace> pts_, lns_;
    std::map<std::string, int> pt_idx_, ln_idx_;
    std::vector<u32> on_;
    std::vector<int> lt_, lm_;
};

} // namespace tgeo
