#pragma once

#include "tgeo/subspace.hpp"

#include <optional>
#include <vector>

namespace tgeo {

// Ternary operation (x y z)_ab on the points of PG(n-1, p) off the
// hyperplanes a and b, computed through the subspace lattice.
//
// Non-collinear triple:
//   w = (((x|y) & a) | z)  &  (((z|y) & b) | x)
// Collinear triple spanning a line L, x != y, with an auxiliary point u off
// L, a and b:
//   p  = (((x|y) & a) | u)  &  (((u|y) & b) | x)      [this is (x y u)]
//   w  = L & (((z|u) & b) | p)
// x == y == z gives x; x == y != z delegates to (z y x)_ba. The result does
// not depend on the admissible u; sweeps verify that.

// Throws Precondition on rank/ambient violations or points on a or b.
void validate_ternary_inputs(const Subspace& x, const Subspace& y, const Subspace& z,
                             const Subspace& a, const Subspace& b);

bool collinear_triple(const Subspace& x, const Subspace& y, const Subspace& z);

Subspace ternary_lattice_generic(const Subspace& x, const Subspace& y, const Subspace& z,
                                 const Subspace& a, const Subspace& b);

// u: auxiliary point, picked by select_u when absent.
Subspace ternary_lattice_collinear(const Subspace& x, const Subspace& y, const Subspace& z,
                                   const Subspace& a, const Subspace& b,
                                   const std::optional<Subspace>& u = std::nullopt);

// Dispatch on the triple shape. u is only consulted in the collinear case.
Subspace ternary_lattice(const Subspace& x, const Subspace& y, const Subspace& z,
                         const Subspace& a, const Subspace& b,
                         const std::optional<Subspace>& u = std::nullopt);

// Collinear value via two generic steps: (x y z) = ((x y u) u z). Used to
// cross-check the single-expression construction.
Subspace ternary_collinear_two_step(const Subspace& x, const Subspace& y, const Subspace& z,
                                    const Subspace& a, const Subspace& b,
                                    const std::optional<Subspace>& u = std::nullopt);

// First point (in the canonical enumeration) off x|y, a and b.
Subspace select_u(const Subspace& x, const Subspace& y, const Subspace& a, const Subspace& b);

// Every admissible auxiliary point for the collinear case.
std::vector<Subspace> admissible_u(const Subspace& x, const Subspace& y,
                                   const Subspace& a, const Subspace& b);

} // namespace tgeo
