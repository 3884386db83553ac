#pragma once

#include "tgeo/subspace.hpp"

#include <map>
#include <string>
#include <vector>

namespace tgeo {

// The five-slot submodule map on GF(p)^n:
//   G(x, a, y, b, z) = { w : exists alpha in a, xi in x with
//                            w - alpha in z, w - xi in b, xi - alpha in y }
// computed literally from the witness definition, plus the lattice
// expressions that recover it in good position.

// Literal witness-set evaluation. Verifies the witness set is a submodule
// (throws LatticeFault otherwise, which would indicate a bug) and returns it
// canonicalized. Guards: p^n <= 81 and |a| |x| p^n <= 10^8.
Subspace gamma_bruteforce(const Subspace& x, const Subspace& a, const Subspace& y,
                          const Subspace& b, const Subspace& z);

// ((x|y) & a | z) & ((z|y) & b | x). No rank constraints: submodule-valued.
// Always contains gamma_bruteforce; equality holds in general position.
Subspace gamma_lattice_generic(const Subspace& x, const Subspace& a, const Subspace& y,
                               const Subspace& b, const Subspace& z);

// x & (y|z) = 0, or y & (x|z) = 0, or z & (x|y) = 0.
//
// Caution: this disjunction does NOT guarantee that the lattice expression
// equals the witness set. The middle condition alone admits counterexamples
// (x = z a line, y = a = b = 0: the witness set is 0, the expression is x);
// use general_position_sufficient for a guarantee.
bool general_position(const Subspace& x, const Subspace& y, const Subspace& z);

// Strengthened position predicate under which gamma_lattice_generic provably
// equals gamma_bruteforce:
//   x & (y|z) = 0, or z & (x|y) = 0, or (y & (x|z) = 0 and x & z = 0).
// Either end condition pins the witness at that end; the middle condition
// needs x & z = 0 on top, or the two end witnesses can drift in tandem.
bool general_position_sufficient(const Subspace& x, const Subspace& y, const Subspace& z);

// u & s = 0 and u | s = everything.
bool common_complement(const Subspace& u, const Subspace& s);

// Collinear-slot forms, for z contained in x|y and an auxiliary u that is a
// common complement of a and b with u & (x|y) = 0. With p := the generic
// expression on (x, a, y, b, u):
//   part2 = ((p|u) & a | z) & ((z|u) & b | p)
//   part3 = (x|y) & ((z|u) & b | p)      [needs hyperplanes a, b; points
//                                         x, y, z; x != y]
Subspace gamma_collinear_part2(const Subspace& x, const Subspace& a, const Subspace& y,
                               const Subspace& b, const Subspace& z, const Subspace& u);
Subspace gamma_collinear_part3(const Subspace& x, const Subspace& a, const Subspace& y,
                               const Subspace& b, const Subspace& z, const Subspace& u);

// Base-p positional encoding of GF(p)^n with addition/subtraction tables and
// per-subspace membership masks; the workhorse behind exhaustive sweeps.
// Capped at p^n <= 64 so a mask fits one word.
class GammaWorld {
public:
    GammaWorld(u32 p, u32 n);

    u32 p() const { return p_; }
    u32 n() const { return n_; }
    u32 q() const { return q_; }
    int nsubs() const { return static_cast<int>(subs_.size()); }
    const Subspace& sub(int i) const { return subs_[i]; }
    int index_of(const Subspace& s) const;

    int meet_i(int i, int j) const { return meet_[static_cast<size_t>(i) * subs_.size() + j]; }
    int join_i(int i, int j) const { return join_[static_cast<size_t>(i) * subs_.size() + j]; }
    bool leq_i(int i, int j) const { return meet_i(i, j) == i; }
    u32 rank_i(int i) const { return subs_[i].rank(); }
    int zero_i() const { return zero_; }
    int full_i() const { return full_; }
    u64 mask(int i) const { return mask_[i]; }

    // Witness-set evaluation on indices; LatticeFault if the witness set is
    // not a submodule.
    int gamma_brute(int x, int a, int y, int b, int z) const;
    int gamma_generic(int x, int a, int y, int b, int z) const;
    bool general_position_i(int x, int y, int z) const;
    bool general_position_sufficient_i(int x, int y, int z) const;
    int part2_i(int x, int a, int y, int b, int z, int u) const;
    int part3_i(int x, int a, int y, int b, int z, int u) const;

private:
    u32 p_, n_, q_;
    int zero_ = 0, full_ = 0;
    std::vector<Subspace> subs_;
    std::map<std::string, int> idx_;
    std::vector<int> meet_, join_;
    std::vector<u64> mask_;
    std::map<u64, int> mask_to_idx_;
    std::vector<u32> add_, sub_tab_;
    std::vector<std::vector<u32>> elems_;
};

} // namespace tgeo
