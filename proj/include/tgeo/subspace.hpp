#pragma once

#include "tgeo/gfp.hpp"

#include <string>
#include <vector>

namespace tgeo {

using Vec = std::vector<u32>; // coordinates in [0, p)

u32 dot(const Vec& f, const Vec& v, u32 p);

// Linear subspace of GF(p)^n, stored as the reduced row echelon basis, which
// is a canonical form: two subspaces are equal iff their row lists are equal.
class Subspace {
public:
    static Subspace zero(u32 p, u32 n);
    static Subspace full(u32 p, u32 n);
    static Subspace span(u32 p, u32 n, const std::vector<Vec>& gens);

    u32 modulus() const { return p_; }
    u32 ambient() const { return n_; }
    u32 rank() const { return static_cast<u32>(rows_.size()); }
    const std::vector<Vec>& rows() const { return rows_; }

    bool contains(const Vec& v) const;
    bool leq(const Subspace& other) const; // containment
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    // First basis row; throws Precondition on the zero space.
    const Vec& representative() const;

    // All p^rank vectors. Guarded against large ranks.
    std::vector<Vec> elements() const;

    std::string key() const; // canonical text form, usable as a map key
    std::string str() const;

private:
    Subspace(u32 p, u32 n) : p_(p), n_(n) {}
    u32 p_, n_;
    std::vector<Vec> rows_;
};

Subspace meet(const Subspace& a, const Subspace& b);
Subspace join(const Subspace& a, const Subspace& b);
bool incident(const Subspace& a, const Subspace& b); // containment either way

// Basis of { x : r . x = 0 for every row r }, canonicalized.
Subspace nullspace(u32 p, u32 n, const std::vector<Vec>& rows);

// Hyperplane { x : f . x = 0 }; f must be nonzero.
Subspace hyperplane_from_normal(u32 p, const Vec& f);

// Normal functional of a rank n-1 subspace, normalized so its first nonzero
// entry is 1.
Vec normal_of_hyperplane(const Subspace& h);

// All nonzero vectors with first nonzero entry 1, in lexicographic order.
// One representative per projective point of GF(p)^n.
std::vector<Vec> normalized_vectors(u32 p, u32 n);

// Rank-1 subspaces of s, ordered by their normalized representative.
std::vector<Subspace> points_of(const Subspace& s);

// Projective space of projective dimension n-1 over GF(p); requires n >= 3.
struct ProjectiveSpace {
    u32 p, n;
    ProjectiveSpace(u32 p, u32 n);
    std::vector<Subspace> points() const;
    std::vector<Subspace> hyperplanes() const; // ordered by normalized normal
};

// Every subspace of GF(p)^n including zero and the full space, ordered by
// (rank, canonical key). Guarded: p^n must stay small.
std::vector<Subspace> all_subspaces(u32 p, u32 n);

} // namespace tgeo
