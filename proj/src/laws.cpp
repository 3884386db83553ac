#include "tgeo/laws.hpp"

#include "tgeo/error.hpp"

#include <utility>

namespace tgeo {

namespace {

u32 as_idx(const Elem& e) {
    if (const u32* v = std::get_if<u32>(&e))
        return *v;
    throw KindMismatch("index-table operation applied to a non-index element");
}

const Scalar& as_scalar(const Elem& e) {
    if (const Scalar* v = std::get_if<Scalar>(&e))
        return *v;
    throw KindMismatch("scalar operation applied to a non-scalar element");
}

const ChartPoint& as_point(const Elem& e) {
    if (const ChartPoint* v = std::get_if<ChartPoint>(&e))
        return *v;
    throw KindMismatch("chart operation applied to a non-point element");
}

std::string vec_label(const Vec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

} // namespace

bool elem_eq(const Elem& a, const Elem& b) {
    if (a.index() != b.index())
        return false;
    if (const u32* v = std::get_if<u32>(&a))
        return *v == std::get<u32>(b);
    if (const Scalar* v = std::get_if<Scalar>(&a))
        return *v == std::get<Scalar>(b);
    return std::get<ChartPoint>(a) == std::get<ChartPoint>(b);
}

std::string elem_show(const Elem& e) {
    if (const u32* v = std::get_if<u32>(&e))
        return std::to_string(*v);
    if (const Scalar* v = std::get_if<Scalar>(&e))
        return v->str();
    return std::get<ChartPoint>(e).str();
}

u64 Carrier::size() const {
    throw DomainError("carrier is not finite");
}

Elem Carrier::at(u64) const {
    throw DomainError("carrier is not finite");
}

Elem Carrier::sample(Rng& rng) const {
    if (!finite())
        throw DomainError("carrier has no sampler");
    return at(rng.below(size()));
}

// ---------------------------------------------------------------------------
// TernaryTable

TernaryTable::TernaryTable(std::string name, u32 n, std::vector<u32> table,
                           std::vector<std::string> labels)
    : name_(std::move(name)), n_(n), table_(std::move(table)), labels_(std::move(labels)) {
    if (n_ == 0)
        throw Precondition("empty ternary table");
    if (table_.size() != static_cast<size_t>(n_) * n_ * n_)
        throw Precondition("ternary table size is not n^3");
    for (u32 v : table_)
        if (v >= n_)
            throw Precondition("ternary table entry out of range: not closed");
    if (!labels_.empty() && labels_.size() != n_)
        throw Precondition("label count differs from table size");
}

std::string TernaryTable::show(const Elem& e) const {
    if (const u32* v = std::get_if<u32>(&e); v && !labels_.empty() && *v < labels_.size())
        return labels_[*v];
    return elem_show(e);
}

Elem TernaryTable::tern(const Elem& x, const Elem& y, const Elem& z) const {
    return entry(as_idx(x), as_idx(y), as_idx(z));
}

TernaryTable TernaryTable::perturbed(u32 x, u32 y, u32 z, u32 new_value) const {
    if (x >= n_ || y >= n_ || z >= n_ || new_value >= n_)
        throw Precondition("perturbation out of range");
    if (entry(x, y, z) == new_value)
        throw Precondition("perturbation does not change the table");
    std::vector<u32> t = table_;
    t[(static_cast<size_t>(x) * n_ + y) * n_ + z] = new_value;
    return TernaryTable(name_ + "/perturbed", n_, std::move(t), labels_);
}

TernaryTable zmod_torsor_table(u32 n) {
    if (n == 0)
        throw Precondition("modulus must be positive");
    std::vector<u32> t(static_cast<size_t>(n) * n * n);
    std::vector<std::string> labels(n);
    for (u32 i = 0; i < n; ++i)
        labels[i] = std::to_string(i);
    for (u32 x = 0; x < n; ++x)
        for (u32 y = 0; y < n; ++y)
            for (u32 z = 0; z < n; ++z)
                t[(static_cast<size_t>(x) * n + y) * n + z] = (x + (n - y) + z) % n;
    return TernaryTable("zmod(" + std::to_string(n) + ")", n, std::move(t), std::move(labels));
}

TernaryTable table_from_plane(const PlaneModel& pm, int a, int b) {
    std::vector<int> pts = pm.carrier(a, b);
    u32 n = static_cast<u32>(pts.size());
    std::vector<int> pos(static_cast<size_t>(pm.npoints()), -1);
    for (u32 i = 0; i < n; ++i)
        pos[static_cast<size_t>(pts[i])] = static_cast<int>(i);
    std::vector<u32> t(static_cast<size_t>(n) * n * n);
    std::vector<std::string> labels(n);
    for (u32 i = 0; i < n; ++i)
        labels[i] = vec_label(pm.points()[static_cast<size_t>(pts[i])].representative());
    for (u32 i = 0; i < n; ++i)
        for (u32 j = 0; j < n; ++j)
            for (u32 k = 0; k < n; ++k) {
                int w = pm.ternary(pts[i], pts[j], pts[k], a, b);
                if (w < 0 || pos[static_cast<size_t>(w)] < 0)
                    throw LatticeFault("ternary value escaped the carrier");
                t[(static_cast<size_t>(i) * n + j) * n + k] = static_cast<u32>(pos[static_cast<size_t>(w)]);
            }
    std::string name = "pg2(" + std::to_string(pm.p()) + ")[a=" + std::to_string(a) +
                       ",b=" + std::to_string(b) + "]";
    return TernaryTable(std::move(name), n, std::move(t), std::move(labels));
}

// ---------------------------------------------------------------------------
// LoopTable

LoopTable::LoopTable(std::string name, u32 n, u32 e, std::vector<u32> mul,
                     std::vector<u32> inv, std::vector<std::string> labels)
    : name_(std::move(name)), n_(n), e_(e), mul_(std::move(mul)), inv_(std::move(inv)),
      labels_(std::move(labels)) {
    if (n_ == 0 || e_ >= n_)
        throw Precondition("loop table needs a neutral element inside the carrier");
    if (mul_.size() != static_cast<size_t>(n_) * n_ || inv_.size() != n_)
        throw Precondition("loop table size mismatch");
    for (u32 v : mul_)
        if (v >= n_)
            throw Precondition("loop product entry out of range: not closed");
    for (u32 v : inv_)
        if (v >= n_)
            throw Precondition("loop inverse entry out of range: not closed");
    if (!labels_.empty() && labels_.size() != n_)
        throw Precondition("label count differs from table size");
}

std::string LoopTable::show(const Elem& e) const {
    if (const u32* v = std::get_if<u32>(&e); v && !labels_.empty() && *v < labels_.size())
        return labels_[*v];
    return elem_show(e);
}

Elem LoopTable::mul(const Elem& x, const Elem& y) const {
    return mul_entry(as_idx(x), as_idx(y));
}

Elem LoopTable::inv(const Elem& x) const {
    return inv_entry(as_idx(x));
}

LoopTable binary_from_ternary(const TernaryTable& t, u32 e) {
    u32 n = t.n();
    if (e >= n)
        throw Precondition("origin outside the carrier");
    std::vector<u32> mul(static_cast<size_t>(n) * n), inv(n);
    for (u32 x = 0; x < n; ++x) {
        for (u32 y = 0; y < n; ++y)
            mul[static_cast<size_t>(x) * n + y] = t.entry(x, e, y);
        inv[x] = t.entry(e, x, e);
    }
    std::string name = t.name() + "/loop@" + t.show(e);
    return LoopTable(std::move(name), n, e, std::move(mul), std::move(inv), t.labels());
}

TernaryTable ternary_from_binary(const LoopTable& l) {
    u32 n = l.n();
    std::vector<u32> t(static_cast<size_t>(n) * n * n);
    for (u32 x = 0; x < n; ++x)
        for (u32 y = 0; y < n; ++y) {
            u32 xyinv = l.mul_entry(x, l.inv_entry(y));
            for (u32 z = 0; z < n; ++z)
                t[(static_cast<size_t>(x) * n + y) * n + z] = l.mul_entry(xyinv, z);
        }
    return TernaryTable(l.name() + "/tern", n, std::move(t), l.labels());
}

// ---------------------------------------------------------------------------
// ChartTernary

namespace {

std::string beta_desc(const ChartConfig& cfg) {
    if (cfg.beta_zero())
        return "beta=0";
    const auto& b = cfg.beta_coeffs();
    bool pr1 = b[0] == Scalar::one(cfg.kind());
    for (size_t i = 1; i < b.size() && pr1; ++i)
        pr1 = b[i].is_zero();
    return pr1 ? "pr1" : "beta=custom";
}

} // namespace

ChartTernary::ChartTernary(ChartConfig cfg)
    : cfg_(std::move(cfg)),
      name_("chart(" + cfg_.kind().str() + ",m=" + std::to_string(cfg_.m()) + "," +
            beta_desc(cfg_) + ")"),
      finite_(cfg_.kind().ring == Ring::GF) {
    if (!finite_)
        return;
    u32 p = cfg_.kind().p, m = cfg_.m();
    u64 total = 1;
    for (u32 i = 0; i < m; ++i) {
        if (total > 1000000 / p)
            throw DomainError("finite chart too large to enumerate");
        total *= p;
    }
    std::vector<u32> digits(m, 0);
    for (u64 c = 0; c < total; ++c) {
        ChartPoint pt;
        pt.coords.reserve(m);
        for (u32 i = 0; i < m; ++i)
            pt.coords.push_back(Scalar::gf(p, digits[i]));
        if (cfg_.admissible(pt))
            pts_.push_back(std::move(pt));
        for (u32 i = m; i-- > 0;) {
            if (++digits[i] == p)
                digits[i] = 0;
            else
                break;
        }
    }
}

u64 ChartTernary::size() const {
    if (!finite_)
        throw DomainError("carrier is not finite");
    return pts_.size();
}

Elem ChartTernary::at(u64 i) const {
    if (!finite_)
        throw DomainError("carrier is not finite");
    return pts_[i];
}

Elem ChartTernary::sample(Rng& rng) const {
    if (finite_)
        return pts_[rng.below(pts_.size())];
    return sample_chart_point(cfg_, rng);
}

std::vector<Elem> ChartTernary::structured() const {
    if (finite_)
        return {};
    std::vector<Elem> pool;
    auto push_if_admissible = [&](ChartPoint pt) {
        if (cfg_.admissible(pt))
            pool.push_back(std::move(pt));
    };
    u32 m = cfg_.m();
    auto with_first = [&](Scalar s) {
        ChartPoint pt;
        pt.coords.assign(m, Scalar::zero(cfg_.kind()));
        pt.coords[0] = std::move(s);
        return pt;
    };
    if (cfg_.kind().ring == Ring::Oct) {
        for (int i = 0; i < 8; ++i)
            push_if_admissible(with_first(Scalar::oct(Octonion::unit(i))));
        if (m >= 2) {
            ChartPoint pt = with_first(Scalar::one(cfg_.kind()));
            pt.coords[1] = Scalar::one(cfg_.kind());
            push_if_admissible(std::move(pt));
        }
    } else {
        push_if_admissible(with_first(Scalar::rat(Rational(1))));
        push_if_admissible(with_first(Scalar::rat(Rational(2))));
        push_if_admissible(with_first(Scalar::rat(Rational(-1))));
        if (m >= 2) {
            ChartPoint pt = with_first(Scalar::rat(Rational(1)));
            pt.coords[1] = Scalar::rat(Rational(1));
            push_if_admissible(std::move(pt));
        }
    }
    return pool;
}

Elem ChartTernary::tern(const Elem& x, const Elem& y, const Elem& z) const {
    return chart_formula(as_point(x), as_point(y), as_point(z), cfg_);
}

// ---------------------------------------------------------------------------
// UnitLoop

UnitLoop::UnitLoop(ScalarKind kind)
    : kind_(kind), name_("units(" + kind.str() + ")"), finite_(kind.ring == Ring::GF) {}

u64 UnitLoop::size() const {
    if (!finite_)
        throw DomainError("carrier is not finite");
    return kind_.p - 1;
}

Elem UnitLoop::at(u64 i) const {
    if (!finite_)
        throw DomainError("carrier is not finite");
    return Scalar::gf(kind_.p, static_cast<long long>(i) + 1);
}

Elem UnitLoop::sample(Rng& rng) const {
    if (finite_)
        return at(rng.below(size()));
    return sample_invertible_scalar(kind_, rng);
}

std::vector<Elem> UnitLoop::structured() const {
    if (finite_)
        return {};
    std::vector<Elem> pool;
    if (kind_.ring == Ring::Oct) {
        for (int i = 0; i < 8; ++i)
            pool.push_back(Scalar::oct(Octonion::unit(i)));
    } else {
        pool.push_back(Scalar::rat(Rational(1)));
        pool.push_back(Scalar::rat(Rational(2)));
        pool.push_back(Scalar::rat(Rational(-1)));
        pool.push_back(Scalar::rat(Rational(1, 2)));
    }
    return pool;
}

Elem UnitLoop::mul(const Elem& x, const Elem& y) const {
    return as_scalar(x) * as_scalar(y);
}

Elem UnitLoop::inv(const Elem& x) const {
    return as_scalar(x).inv();
}

// ---------------------------------------------------------------------------
// DerivedLoop / TernaryOfLoop

DerivedLoop::DerivedLoop(const TernaryStructure& base, Elem origin)
    : base_(&base), origin_(std::move(origin)),
      name_(base.name() + "@" + base.show(origin_)) {}

TernaryOfLoop::TernaryOfLoop(const LoopStructure& base)
    : base_(&base), name_("tern(" + base.name() + ")") {}

Elem TernaryOfLoop::tern(const Elem& x, const Elem& y, const Elem& z) const {
    return base_->mul(base_->mul(x, base_->inv(y)), z);
}

// ---------------------------------------------------------------------------
// Engine

CheckReport run_law(const Carrier& c, const Law& law, const CheckOptions& opt) {
    CheckReport rep;
    rep.law = law.name;
    rep.structure = c.name();
    rep.seed = opt.seed;

    auto eval_tuple = [&](const std::vector<Elem>& args) {
        for (const auto& eq : law.eqs) {
            auto [lhs, rhs] = eq.sides(args);
            if (elem_eq(lhs, rhs))
                continue;
            ++rep.failures;
            if (rep.witnesses.size() < opt.max_witnesses) {
                Witness w;
                w.args.reserve(args.size());
                for (const Elem& a : args)
                    w.args.push_back(c.show(a));
                w.equation = eq.label;
                w.lhs = c.show(lhs);
                w.rhs = c.show(rhs);
                rep.witnesses.push_back(std::move(w));
                rep.typed.push_back({args, eq.label});
            }
        }
        ++rep.trials;
    };

    // Odometer over pool^arity, stopping after at most cap tuples.
    auto sweep = [&](const std::function<Elem(u64)>& elem_at, u64 n, u64 cap) {
        if (law.arity == 0) {
            eval_tuple({});
            return;
        }
        if (n == 0)
            return;
        std::vector<u64> idx(law.arity, 0);
        std::vector<Elem> args(law.arity, elem_at(0));
        u64 made = 0;
        for (;;) {
            for (u32 i = 0; i < law.arity; ++i)
                args[i] = elem_at(idx[i]);
            eval_tuple(args);
            if (++made >= cap)
                return;
            u32 pos = law.arity;
            while (pos-- > 0) {
                if (++idx[pos] < n)
                    break;
                idx[pos] = 0;
                if (pos == 0)
                    return;
            }
        }
    };

    bool exhaustive = false;
    if (c.finite()) {
        u64 n = c.size(), count = 1;
        exhaustive = true;
        for (u32 i = 0; i < law.arity && exhaustive; ++i) {
            if (n == 0 || count > opt.exhaustive_cap / n)
                exhaustive = false;
            else
                count *= n;
        }
    }

    if (exhaustive) {
        rep.mode = "exhaustive";
        u64 n = law.arity == 0 ? 1 : c.size();
        sweep([&](u64 i) { return c.at(i); }, n, ~0ULL);
    } else {
        rep.mode = "sampled";
        Rng rng(derive_seed(opt.seed, law.name + "|" + c.name()));
        std::vector<Elem> pool = c.structured();
        if (!pool.empty())
            sweep([&](u64 i) { return pool[i]; }, pool.size(), opt.structured_cap);
        if (law.arity == 0) {
            if (rep.trials == 0)
                eval_tuple({});
        } else {
            std::vector<Elem> args;
            for (u64 t = 0; t < opt.trials; ++t) {
                args.clear();
                for (u32 i = 0; i < law.arity; ++i)
                    args.push_back(c.sample(rng));
                eval_tuple(args);
            }
        }
    }
    rep.pass = rep.failures == 0;
    return rep;
}

bool revalidate(const Law& law, const TypedWitness& w) {
    for (const auto& eq : law.eqs) {
        if (eq.label != w.equation)
            continue;
        auto [lhs, rhs] = eq.sides(w.args);
        return !elem_eq(lhs, rhs);
    }
    return false;
}

// ---------------------------------------------------------------------------
// Law factories

namespace {

using Args = std::vector<Elem>;
using Sides = std::pair<Elem, Elem>;

} // namespace

Law law_T0(const TernaryStructure& s) {
    Law law{"T0", 2, {}};
    law.eqs.push_back({"(xxy) = y", [&s](const Args& a) -> Sides {
                           return {s.tern(a[0], a[0], a[1]), a[1]};
                       }});
    law.eqs.push_back({"(yxx) = y", [&s](const Args& a) -> Sides {
                           return {s.tern(a[1], a[0], a[0]), a[1]};
                       }});
    return law;
}

Law law_T1(const TernaryStructure& s) {
    Law law{"T1", 5, {}};
    auto mid = [&s](const Args& a) { return s.tern(a[0], s.tern(a[3], a[2], a[1]), a[4]); };
    law.eqs.push_back({"(xy(zuv)) = (x(uzy)v)", [&s, mid](const Args& a) -> Sides {
                           return {s.tern(a[0], a[1], s.tern(a[2], a[3], a[4])), mid(a)};
                       }});
    law.eqs.push_back({"((xyz)uv) = (x(uzy)v)", [&s, mid](const Args& a) -> Sides {
                           return {s.tern(s.tern(a[0], a[1], a[2]), a[3], a[4]), mid(a)};
                       }});
    return law;
}

Law law_MT0(const TernaryStructure& s) {
    Law law = law_T0(s);
    law.name = "MT0";
    return law;
}

Law law_MT1(const TernaryStructure& s) {
    Law law{"MT1", 4, {}};
    law.eqs.push_back({"(uv(xyx)) = ((uvx)yx)", [&s](const Args& a) -> Sides {
                           return {s.tern(a[0], a[1], s.tern(a[2], a[3], a[2])),
                                   s.tern(s.tern(a[0], a[1], a[2]), a[3], a[2])};
                       }});
    return law;
}

Law law_MT2(const TernaryStructure& s) {
    Law law{"MT2", 3, {}};
    law.eqs.push_back({"(xy(xyz)) = ((xyx)yz)", [&s](const Args& a) -> Sides {
                           return {s.tern(a[0], a[1], s.tern(a[0], a[1], a[2])),
                                   s.tern(s.tern(a[0], a[1], a[0]), a[1], a[2])};
                       }});
    return law;
}

Law law_MT1_mirror(const TernaryStructure& s) {
    Law law{"MT1m", 4, {}};
    law.eqs.push_back({"((xyx)vu) = (xy(xvu))", [&s](const Args& a) -> Sides {
                           return {s.tern(s.tern(a[0], a[1], a[0]), a[2], a[3]),
                                   s.tern(a[0], a[1], s.tern(a[0], a[2], a[3]))};
                       }});
    return law;
}

Law law_MT2_mirror(const TernaryStructure& s) {
    Law law{"MT2m", 3, {}};
    law.eqs.push_back({"((zyx)yx) = (zy(xyx))", [&s](const Args& a) -> Sides {
                           return {s.tern(s.tern(a[0], a[1], a[2]), a[1], a[2]),
                                   s.tern(a[0], a[1], s.tern(a[2], a[1], a[2]))};
                       }});
    return law;
}

std::vector<Law> torsor_laws(const TernaryStructure& s) {
    std::vector<Law> laws;
    laws.push_back(law_T0(s));
    laws.push_back(law_T1(s));
    return laws;
}

std::vector<Law> moufang_ternary_laws(const TernaryStructure& s) {
    std::vector<Law> laws;
    laws.push_back(law_MT0(s));
    laws.push_back(law_MT1(s));
    laws.push_back(law_MT2(s));
    return laws;
}

std::vector<Law> moufang_ternary_laws_mirror(const TernaryStructure& s) {
    std::vector<Law> laws;
    laws.push_back(law_MT0(s));
    laws.push_back(law_MT1_mirror(s));
    laws.push_back(law_MT2_mirror(s));
    return laws;
}

std::vector<Law> loop_suite(const LoopStructure& l) {
    std::vector<Law> laws;

    Law neutral{"neutral", 1, {}};
    neutral.eqs.push_back({"e.x = x", [&l](const Args& a) -> Sides {
                               return {l.mul(l.neutral(), a[0]), a[0]};
                           }});
    neutral.eqs.push_back({"x.e = x", [&l](const Args& a) -> Sides {
                               return {l.mul(a[0], l.neutral()), a[0]};
                           }});
    laws.push_back(std::move(neutral));

    Law inverses{"inverses", 1, {}};
    inverses.eqs.push_back({"x.x^-1 = e", [&l](const Args& a) -> Sides {
                                return {l.mul(a[0], l.inv(a[0])), l.neutral()};
                            }});
    inverses.eqs.push_back({"x^-1.x = e", [&l](const Args& a) -> Sides {
                                return {l.mul(l.inv(a[0]), a[0]), l.neutral()};
                            }});
    laws.push_back(std::move(inverses));

    Law lip{"left_inverse_property", 2, {}};
    lip.eqs.push_back({"x^-1.(x.y) = y", [&l](const Args& a) -> Sides {
                           return {l.mul(l.inv(a[0]), l.mul(a[0], a[1])), a[1]};
                       }});
    laws.push_back(std::move(lip));

    Law rip{"right_inverse_property", 2, {}};
    rip.eqs.push_back({"(x.y).y^-1 = x", [&l](const Args& a) -> Sides {
                           return {l.mul(l.mul(a[0], a[1]), l.inv(a[1])), a[0]};
                       }});
    laws.push_back(std::move(rip));

    Law m1{"moufang_M1", 3, {}};
    m1.eqs.push_back({"z.(x.(z.y)) = ((z.x).z).y", [&l](const Args& a) -> Sides {
                          return {l.mul(a[2], l.mul(a[0], l.mul(a[2], a[1]))),
                                  l.mul(l.mul(l.mul(a[2], a[0]), a[2]), a[1])};
                      }});
    laws.push_back(std::move(m1));

    Law m2{"moufang_M2", 3, {}};
    m2.eqs.push_back({"x.(z.(y.z)) = ((x.z).y).z", [&l](const Args& a) -> Sides {
                          return {l.mul(a[0], l.mul(a[2], l.mul(a[1], a[2]))),
                                  l.mul(l.mul(l.mul(a[0], a[2]), a[1]), a[2])};
                      }});
    laws.push_back(std::move(m2));

    Law n1{"moufang_N1", 3, {}};
    n1.eqs.push_back({"(z.x).(y.z) = (z.(x.y)).z", [&l](const Args& a) -> Sides {
                          return {l.mul(l.mul(a[2], a[0]), l.mul(a[1], a[2])),
                                  l.mul(l.mul(a[2], l.mul(a[0], a[1])), a[2])};
                      }});
    laws.push_back(std::move(n1));

    Law n2{"moufang_N2", 3, {}};
    n2.eqs.push_back({"(z.x).(y.z) = z.((x.y).z)", [&l](const Args& a) -> Sides {
                          return {l.mul(l.mul(a[2], a[0]), l.mul(a[1], a[2])),
                                  l.mul(a[2], l.mul(l.mul(a[0], a[1]), a[2]))};
                      }});
    laws.push_back(std::move(n2));

    Law bol{"right_bol", 3, {}};
    bol.eqs.push_back({"((x.y).z).y = x.((y.z).y)", [&l](const Args& a) -> Sides {
                           return {l.mul(l.mul(l.mul(a[0], a[1]), a[2]), a[1]),
                                   l.mul(a[0], l.mul(l.mul(a[1], a[2]), a[1]))};
                       }});
    laws.push_back(std::move(bol));

    Law alt{"left_alternative", 2, {}};
    alt.eqs.push_back({"(x.x).y = x.(x.y)", [&l](const Args& a) -> Sides {
                           return {l.mul(l.mul(a[0], a[0]), a[1]),
                                   l.mul(a[0], l.mul(a[0], a[1]))};
                       }});
    laws.push_back(std::move(alt));

    return laws;
}

Law law_commutative(const LoopStructure& l) {
    Law law{"commutative", 2, {}};
    law.eqs.push_back({"x.y = y.x", [&l](const Args& a) -> Sides {
                           return {l.mul(a[0], a[1]), l.mul(a[1], a[0])};
                       }});
    return law;
}

Law law_associative(const LoopStructure& l) {
    Law law{"associative", 3, {}};
    law.eqs.push_back({"(x.y).z = x.(y.z)", [&l](const Args& a) -> Sides {
                           return {l.mul(l.mul(a[0], a[1]), a[2]),
                                   l.mul(a[0], l.mul(a[1], a[2]))};
                       }});
    return law;
}

std::vector<Law> construction_chain(const DerivedLoop& d) {
    std::vector<Law> laws;

    Law l1{"prod_inv_via_ternary", 2, {}};
    l1.eqs.push_back({"x.y^-1 = (xye)", [&d](const Args& a) -> Sides {
                          return {d.mul(a[0], d.inv(a[1])), d.tern(a[0], a[1], d.neutral())};
                      }});
    laws.push_back(std::move(l1));

    Law l2{"double_inv_prod", 3, {}};
    l2.eqs.push_back({"(x.y^-1).z^-1 = (x y z^-1)", [&d](const Args& a) -> Sides {
                          return {d.mul(d.mul(a[0], d.inv(a[1])), d.inv(a[2])),
                                  d.tern(a[0], a[1], d.inv(a[2]))};
                      }});
    laws.push_back(std::move(l2));

    Law l3{"inv_inv_left_cancel", 1, {}};
    l3.eqs.push_back({"(x^-1)^-1.x^-1 = e", [&d](const Args& a) -> Sides {
                          return {d.mul(d.inv(d.inv(a[0])), d.inv(a[0])), d.neutral()};
                      }});
    laws.push_back(std::move(l3));

    Law l4{"inv_inv_slot_cancel", 2, {}};
    l4.eqs.push_back({"((x^-1)^-1 x y^-1) = y^-1", [&d](const Args& a) -> Sides {
                          return {d.tern(d.inv(d.inv(a[0])), a[0], d.inv(a[1])), d.inv(a[1])};
                      }});
    laws.push_back(std::move(l4));

    Law l5{"right_inv_inv_cancel", 2, {}};
    l5.eqs.push_back({"(x y (y^-1)^-1) = x", [&d](const Args& a) -> Sides {
                          return {d.tern(a[0], a[1], d.inv(d.inv(a[1]))), a[0]};
                      }});
    laws.push_back(std::move(l5));

    Law l6{"inv_involutive", 1, {}};
    l6.eqs.push_back({"(x^-1)^-1 = x", [&d](const Args& a) -> Sides {
                          return {d.inv(d.inv(a[0])), a[0]};
                      }});
    laws.push_back(std::move(l6));

    Law l7{"neutral_self_inverse", 0, {}};
    l7.eqs.push_back({"e^-1 = e", [&d](const Args&) -> Sides {
                          return {d.inv(d.neutral()), d.neutral()};
                      }});
    laws.push_back(std::move(l7));

    Law l8{"ternary_via_prod", 3, {}};
    l8.eqs.push_back({"(x.y^-1).z = (xyz)", [&d](const Args& a) -> Sides {
                          return {d.mul(d.mul(a[0], d.inv(a[1])), a[2]),
                                  d.tern(a[0], a[1], a[2])};
                      }});
    laws.push_back(std::move(l8));

    return laws;
}

std::vector<Law> loop_roundtrip(const LoopStructure& l) {
    std::vector<Law> laws;

    Law p{"roundtrip_product", 2, {}};
    p.eqs.push_back({"(x.e^-1).y = x.y", [&l](const Args& a) -> Sides {
                         return {l.mul(l.mul(a[0], l.inv(l.neutral())), a[1]),
                                 l.mul(a[0], a[1])};
                     }});
    laws.push_back(std::move(p));

    Law i{"roundtrip_inverse", 1, {}};
    i.eqs.push_back({"(e.x^-1).e = x^-1", [&l](const Args& a) -> Sides {
                         return {l.mul(l.mul(l.neutral(), l.inv(a[0])), l.neutral()),
                                 l.inv(a[0])};
                     }});
    laws.push_back(std::move(i));

    return laws;
}

Law law_beta_hom(const ChartTernary& ct) {
    if (ct.cfg().beta_zero())
        throw Precondition("beta homomorphism needs a nonzero chart form");
    Law law{"beta_hom", 3, {}};
    law.eqs.push_back(
        {"beta((xyz)) = (beta(z).beta(y)^-1).beta(x)", [&ct](const Args& a) -> Sides {
             const ChartConfig& cfg = ct.cfg();
             Scalar lhs = cfg.beta(chart_formula(as_point(a[0]), as_point(a[1]),
                                                 as_point(a[2]), cfg));
             Scalar rhs = (cfg.beta(as_point(a[2])) * cfg.beta(as_point(a[1])).inv()) *
                          cfg.beta(as_point(a[0]));
             return {std::move(lhs), std::move(rhs)};
         }});
    return law;
}

} // namespace tgeo
