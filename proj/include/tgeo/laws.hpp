#pragma once

#include "tgeo/chart.hpp"
#include "tgeo/plane_model.hpp"
#include "tgeo/sampling.hpp"
#include "tgeo/scalar.hpp"

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace tgeo {

// Identity checking over three families of carriers: finite operation tables
// (indices), affine-chart points, and invertible scalars. Laws are closures
// over a concrete structure; the engine only sees a Carrier for enumeration,
// sampling and rendering, so exhaustive and sampled modes share one path.

using Elem = std::variant<u32, Scalar, ChartPoint>;

bool elem_eq(const Elem& a, const Elem& b); // false across alternatives
std::string elem_show(const Elem& e);

class Carrier {
public:
    virtual ~Carrier() = default;
    virtual std::string name() const = 0;
    virtual bool finite() const = 0;
    virtual u64 size() const;            // finite carriers only
    virtual Elem at(u64 i) const;        // finite carriers only
    virtual Elem sample(Rng& rng) const; // default: uniform over a finite carrier
    // Priority elements tried before random sampling (tuples of these catch
    // the classical violations, e.g. basis units for nonassociativity).
    virtual std::vector<Elem> structured() const { return {}; }
    virtual std::string show(const Elem& e) const { return elem_show(e); }
};

class TernaryStructure : public Carrier {
public:
    virtual Elem tern(const Elem& x, const Elem& y, const Elem& z) const = 0;
};

class LoopStructure : public Carrier {
public:
    virtual Elem mul(const Elem& x, const Elem& y) const = 0;
    virtual Elem inv(const Elem& x) const = 0;
    virtual Elem neutral() const = 0;
};

// ---------------------------------------------------------------------------
// Concrete carriers

// N^3 operation table on indices 0..N-1. Entries are validated to be < N.
class TernaryTable : public TernaryStructure {
public:
    TernaryTable(std::string name, u32 n, std::vector<u32> table,
                 std::vector<std::string> labels = {});

    std::string name() const override { return name_; }
    bool finite() const override { return true; }
    u64 size() const override { return n_; }
    Elem at(u64 i) const override { return static_cast<u32>(i); }
    std::string show(const Elem& e) const override;
    Elem tern(const Elem& x, const Elem& y, const Elem& z) const override;

    u32 n() const { return n_; }
    u32 entry(u32 x, u32 y, u32 z) const { return table_[(static_cast<size_t>(x) * n_ + y) * n_ + z]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Copy with one entry redirected; breaks the laws, for negative controls.
    TernaryTable perturbed(u32 x, u32 y, u32 z, u32 new_value) const;

private:
    std::string name_;
    u32 n_;
    std::vector<u32> table_;
    std::vector<std::string> labels_;
};

// x - y + z on Z/n: the standard abelian torsor.
TernaryTable zmod_torsor_table(u32 n);

// The ternary operation restricted to the points off the lines a and b of
// PG(2, p), tabulated through the lattice construction.
TernaryTable table_from_plane(const PlaneModel& pm, int a, int b);

// Finite binary loop on indices with two-sided inverses.
class LoopTable : public LoopStructure {
public:
    LoopTable(std::string name, u32 n, u32 e, std::vector<u32> mul,
              std::vector<u32> inv, std::vector<std::string> labels = {});

    std::string name() const override { return name_; }
    bool finite() const override { return true; }
    u64 size() const override { return n_; }
    Elem at(u64 i) const override { return static_cast<u32>(i); }
    std::string show(const Elem& e) const override;

    Elem mul(const Elem& x, const Elem& y) const override;
    Elem inv(const Elem& x) const override;
    Elem neutral() const override { return e_; }

    u32 n() const { return n_; }
    u32 e() const { return e_; }
    u32 mul_entry(u32 x, u32 y) const { return mul_[static_cast<size_t>(x) * n_ + y]; }
    u32 inv_entry(u32 x) const { return inv_[x]; }
    const std::vector<std::string>& labels() const { return labels_; }

private:
    std::string name_;
    u32 n_, e_;
    std::vector<u32> mul_, inv_;
    std::vector<std::string> labels_;
};

// x . y := (x e y), x^-1 := (e x e) on a ternary table.
LoopTable binary_from_ternary(const TernaryTable& t, u32 e);
// (x y z) := (x . y^-1) . z on a loop table.
TernaryTable ternary_from_binary(const LoopTable& l);

// Chart points with invertible beta under the chart ternary operation.
// Finite for GF kinds (points enumerated eagerly), sampled otherwise.
class ChartTernary : public TernaryStructure {
public:
    explicit ChartTernary(ChartConfig cfg);

    std::string name() const override { return name_; }
    bool finite() const override { return finite_; }
    u64 size() const override;
    Elem at(u64 i) const override;
    Elem sample(Rng& rng) const override;
    std::vector<Elem> structured() const override;
    Elem tern(const Elem& x, const Elem& y, const Elem& z) const override;

    const ChartConfig& cfg() const { return cfg_; }

private:
    ChartConfig cfg_;
    std::string name_;
    bool finite_;
    std::vector<ChartPoint> pts_; // GF kinds only
};

// Invertible scalars under multiplication. Finite for GF kinds.
class UnitLoop : public LoopStructure {
public:
    explicit UnitLoop(ScalarKind kind);

    std::string name() const override { return name_; }
    bool finite() const override { return finite_; }
    u64 size() const override;
    Elem at(u64 i) const override;
    Elem sample(Rng& rng) const override;
    std::vector<Elem> structured() const override;

    Elem mul(const Elem& x, const Elem& y) const override;
    Elem inv(const Elem& x) const override;
    Elem neutral() const override { return Scalar::one(kind_); }

    ScalarKind kind() const { return kind_; }

private:
    ScalarKind kind_;
    std::string name_;
    bool finite_;
};

// The origin-y isotope of a ternary structure: x . z := (x y z), with
// x^-1 := (y x y). At a neutral origin this is the loop of the
// ternary-to-binary construction; the base ternary stays reachable so the
// construction identities can be stated against both operations at once.
class DerivedLoop : public LoopStructure {
public:
    DerivedLoop(const TernaryStructure& base, Elem origin);

    std::string name() const override { return name_; }
    bool finite() const override { return base_->finite(); }
    u64 size() const override { return base_->size(); }
    Elem at(u64 i) const override { return base_->at(i); }
    Elem sample(Rng& rng) const override { return base_->sample(rng); }
    std::vector<Elem> structured() const override { return base_->structured(); }
    std::string show(const Elem& e) const override { return base_->show(e); }

    Elem mul(const Elem& x, const Elem& z) const override { return base_->tern(x, origin_, z); }
    Elem inv(const Elem& x) const override { return base_->tern(origin_, x, origin_); }
    Elem neutral() const override { return origin_; }

    const TernaryStructure& base() const { return *base_; }
    Elem tern(const Elem& x, const Elem& y, const Elem& z) const { return base_->tern(x, y, z); }

private:
    const TernaryStructure* base_;
    Elem origin_;
    std::string name_;
};

// (x y z) := (x . y^-1) . z on any loop with two-sided inverses.
class TernaryOfLoop : public TernaryStructure {
public:
    explicit TernaryOfLoop(const LoopStructure& base);

    std::string name() const override { return name_; }
    bool finite() const override { return base_->finite(); }
    u64 size() const override { return base_->size(); }
    Elem at(u64 i) const override { return base_->at(i); }
    Elem sample(Rng& rng) const override { return base_->sample(rng); }
    std::vector<Elem> structured() const override { return base_->structured(); }
    std::string show(const Elem& e) const override { return base_->show(e); }

    Elem tern(const Elem& x, const Elem& y, const Elem& z) const override;

private:
    const LoopStructure* base_;
    std::string name_;
};

// ---------------------------------------------------------------------------
// Laws and the check engine

struct LawEq {
    std::string label; // the equation, in display form
    std::function<std::pair<Elem, Elem>(const std::vector<Elem>&)> sides;
};

struct Law {
    std::string name;
    u32 arity = 0;
    std::vector<LawEq> eqs;
};

struct Witness {
    std::vector<std::string> args;
    std::string equation, lhs, rhs;
};

// Typed twin of a Witness; lets a fresh structure re-evaluate the violation.
struct TypedWitness {
    std::vector<Elem> args;
    std::string equation;
};

struct CheckOptions {
    u64 trials = 10000;          // random tuples in sampled mode
    u64 seed = 0;                // root seed; per-law streams are derived
    u32 max_witnesses = 3;
    u64 exhaustive_cap = 10000000; // exhaust whenever size^arity fits
    u64 structured_cap = 100000;   // cap on the structured-first phase
};

struct CheckReport {
    std::string law, structure;
    std::string mode; // "exhaustive" | "sampled"
    u64 trials = 0;   // tuples evaluated
    u64 failures = 0;
    bool pass = true;
    u64 seed = 0;
    std::vector<Witness> witnesses;
    std::vector<TypedWitness> typed;
};

// Exhaustive whenever the carrier is finite and size^arity fits the cap
// (sampling is never used where exhaustion is feasible); sampled otherwise,
// with the structured tuples tried first.
CheckReport run_law(const Carrier& c, const Law& law, const CheckOptions& opt);

// True iff some equation of the law is violated on the witness arguments.
bool revalidate(const Law& law, const TypedWitness& w);

// Law factories. Each law captures the structure by reference; the structure
// must outlive the returned law.
Law law_T0(const TernaryStructure& s);  // (xxy) = y = (yxx)
Law law_T1(const TernaryStructure& s);  // (xy(zuv)) = (x(uzy)v) = ((xyz)uv)
Law law_MT0(const TernaryStructure& s); // idempotent pair, as T0
Law law_MT1(const TernaryStructure& s); // (uv(xyx)) = ((uvx)yx)
Law law_MT2(const TernaryStructure& s); // (xy(xyz)) = ((xyx)yz)

// Mirror-oriented Moufang laws: every outer ternary read right-to-left.
// A structure satisfies these iff its reversal (x,y,z) -> (zyx) satisfies
// MT1/MT2. Loop-derived ternaries (x.y^-1).z carry the plain orientation;
// the projective chart operation multiplies its scalar factor onto the z
// slot and carries the mirror orientation instead (its slice through the
// scalar axis is (z.y^-1).x). Torsors satisfy both. MT0 is self-mirrored.
Law law_MT1_mirror(const TernaryStructure& s); // ((xyx)vu) = (xy(xvu))
Law law_MT2_mirror(const TernaryStructure& s); // ((zyx)yx) = (zy(xyx))

std::vector<Law> torsor_laws(const TernaryStructure& s);          // T0, T1
std::vector<Law> moufang_ternary_laws(const TernaryStructure& s); // MT0-MT2
std::vector<Law> moufang_ternary_laws_mirror(const TernaryStructure& s);

// Binary loop suite: neutrality, two-sided inverses, inverse properties,
// the four Moufang forms, right Bol, left alternative.
std::vector<Law> loop_suite(const LoopStructure& l);
Law law_commutative(const LoopStructure& l);
Law law_associative(const LoopStructure& l);

// The auxiliary identities tying a ternary structure to its origin loop:
//   x . y^-1 = (x y e)                 prod_inv_via_ternary
//   (x . y^-1) . z^-1 = (x y z^-1)     double_inv_prod
//   (x^-1)^-1 . x^-1 = e               inv_inv_left_cancel
//   ((x^-1)^-1 x y^-1) = y^-1          inv_inv_slot_cancel
//   (x y (y^-1)^-1) = x                right_inv_inv_cancel
//   (x^-1)^-1 = x                      inv_involutive
//   e^-1 = e                           neutral_self_inverse
//   (x . y^-1) . z = (x y z)           ternary_via_prod
// The last one is the ternary-binary-ternary round trip.
std::vector<Law> construction_chain(const DerivedLoop& d);

// Loop-side round trip: the ternary built from the loop, read back at e,
// returns the original product and inverse.
std::vector<Law> loop_roundtrip(const LoopStructure& l);

// beta((x y z)) = (beta(z) . beta(y)^-1) . beta(x): the chart form is a
// homomorphism onto the scalar units, outer slots reversed (left-action
// convention). Both sides are computed by routes that share no code.
Law law_beta_hom(const ChartTernary& ct);

} // namespace tgeo
