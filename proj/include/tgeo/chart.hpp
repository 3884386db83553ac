#pragma once

#include "tgeo/scalar.hpp"
#include "tgeo/subspace.hpp"

#include <string>
#include <vector>

namespace tgeo {

// Point of an affine chart: m coordinates sharing one scalar kind.
struct ChartPoint {
    std::vector<Scalar> coords;

    bool operator==(const ChartPoint& o) const { return coords == o.coords; }
    bool operator!=(const ChartPoint& o) const { return !(*this == o); }
    std::string str() const;
};

// Affine chart of the complement of a hyperplane a, coordinatized as K^m.
// The second hyperplane b is tracked by a linear form beta (coefficients
// acting from the left): b meets the chart in { beta = 0 }, and the carrier
// of the ternary operation is { x : beta(x) invertible }. beta identically
// zero encodes b == a, where the carrier is the whole chart.
//
// For the octonion kind every beta coefficient must be central (a rational
// multiple of 1); this keeps beta compatible with the componentwise scalar
// action and covers the canonical first-coordinate chart.
class ChartConfig {
public:
    ChartConfig(ScalarKind kind, u32 m, std::vector<Scalar> beta);

    // beta = projection on the first coordinate
    static ChartConfig pr1(ScalarKind kind, u32 m);
    // beta = 0, the coincident-hyperplane chart (plain affine space)
    static ChartConfig coincident(ScalarKind kind, u32 m);

    ScalarKind kind() const { return kind_; }
    u32 m() const { return m_; }
    const std::vector<Scalar>& beta_coeffs() const { return beta_; }
    bool beta_zero() const { return beta_zero_; }

    Scalar beta(const ChartPoint& x) const;
    bool admissible(const ChartPoint& x) const;
    void require_point(const ChartPoint& x, const char* what) const;

private:
    ScalarKind kind_;
    u32 m_;
    std::vector<Scalar> beta_;
    bool beta_zero_;
};

// (x y z) in chart coordinates: (beta(z) beta(y)^{-1}) (x - y) + z, the
// scalar factor multiplying each coordinate from the left. With beta == 0
// this degenerates to x - y + z.
ChartPoint chart_formula(const ChartPoint& x, const ChartPoint& y, const ChartPoint& z,
                         const ChartConfig& cfg);

// beta((x y z)) computed as (beta(z) beta(y)^{-1}) beta(x), with an internal
// cross-check against beta(chart_formula(x, y, z)).
Scalar beta_of_ternary(const ChartPoint& x, const ChartPoint& y, const ChartPoint& z,
                       const ChartConfig& cfg);

// Chart normalized around a chosen origin: the origin sits at 0 and b at
// { beta = 1 } (beta identically zero again encodes b == a). The carrier
// condition becomes 1 - beta(x) invertible.
struct OriginChart {
    ScalarKind kind;
    u32 m;
    std::vector<Scalar> beta;

    Scalar beta_of(const ChartPoint& x) const;
    bool admissible(const ChartPoint& x) const;
};

// Re-base a kernel-normalized chart at an admissible origin y: coordinates
// become s = t - y and the form becomes s -> -beta(s) beta(y)^{-1}. Field
// kinds only: the new coefficients must commute with the coordinates.
// rebase_point performs the matching coordinate shift.
OriginChart rebase_at(const ChartConfig& cfg, const ChartPoint& y);
ChartPoint rebase_point(const ChartPoint& y, const ChartPoint& t);

// Binary product in an origin-normalized chart: x z = (1 - beta(z)) x + z.
// The origin 0 is the neutral element.
ChartPoint binary_with_origin(const ChartPoint& x, const ChartPoint& z, const OriginChart& oc);

// Coordinatization of the complement of a hyperplane a of PG(n-1, p), with a
// second hyperplane b tracked by the chart form. Ties the subspace lattice
// picture to chart coordinates: embed/lift are mutually inverse between
// rank-1 points off a and chart points over GF(p).
class LatticeChart {
public:
    LatticeChart(const Subspace& a, const Subspace& b);

    const Subspace& a() const { return a_; }
    const Subspace& b() const { return b_; }
    const ChartConfig& cfg() const { return cfg_; }
    u32 p() const { return p_; }

    ChartPoint embed(const Subspace& pt) const; // rank-1 point off a
    Subspace lift(const ChartPoint& t) const;

private:
    u32 p_, n_;
    Subspace a_, b_;
    Vec fa_, fb_;
    Vec origin_;            // f_a(origin) = 1; on b whenever a != b
    std::vector<Vec> basis_; // rows of a, the direction space of the chart
    std::vector<u32> pivots_;
    ChartConfig cfg_;        // initialized last; init_parts fills the rest

    ChartConfig init_parts();
};

} // namespace tgeo
