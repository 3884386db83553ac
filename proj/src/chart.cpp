#include "tgeo/chart.hpp"

#include "tgeo/error.hpp"

#include <algorithm>
#include <sstream>

namespace tgeo {

std::string ChartPoint::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) os << ", ";
        os << coords[i].str();
    }
    os << ")";
    return os.str();
}

namespace {

bool is_central(const Scalar& s) {
    if (!(s.kind() == ScalarKind::oct())) return true;
    const Octonion& o = s.oct_val();
    for (int i = 1; i < 8; ++i)
        if (o.c[i] != 0) return false;
    return true;
}

} // namespace

ChartConfig::ChartConfig(ScalarKind kind, u32 m, std::vector<Scalar> beta)
    : kind_(kind), m_(m), beta_(std::move(beta)) {
    if (m_ == 0) throw Precondition("chart dimension must be positive");
    if (beta_.size() != m_) throw Precondition("beta coefficient count != chart dimension");
    for (const Scalar& c : beta_) {
        if (!(c.kind() == kind_)) throw KindMismatch("beta coefficient kind mismatch");
        if (!is_central(c))
            throw Precondition("octonion chart needs central beta coefficients");
    }
    beta_zero_ = std::all_of(beta_.begin(), beta_.end(),
                             [](const Scalar& c) { return c.is_zero(); });
}

ChartConfig ChartConfig::pr1(ScalarKind kind, u32 m) {
    std::vector<Scalar> beta(m, Scalar::zero(kind));
    beta[0] = Scalar::one(kind);
    return ChartConfig(kind, m, std::move(beta));
}

ChartConfig ChartConfig::coincident(ScalarKind kind, u32 m) {
    return ChartConfig(kind, m, std::vector<Scalar>(m, Scalar::zero(kind)));
}

Scalar ChartConfig::beta(const ChartPoint& x) const {
    if (x.coords.size() != m_) throw Precondition("chart point has wrong dimension");
    Scalar s = Scalar::zero(kind_);
    for (u32 i = 0; i < m_; ++i) {
        if (beta_[i].is_zero()) continue;
        s = s + beta_[i] * x.coords[i];
    }
    return s;
}

bool ChartConfig::admissible(const ChartPoint& x) const {
    if (x.coords.size() != m_) return false;
    for (const Scalar& c : x.coords)
        if (!(c.kind() == kind_)) return false;
    return beta_zero_ || !beta(x).is_zero();
}

void ChartConfig::require_point(const ChartPoint& x, const char* what) const {
    if (x.coords.size() != m_)
        throw Precondition(std::string(what) + ": chart point has wrong dimension");
    for (const Scalar& c : x.coords)
        if (!(c.kind() == kind_))
            throw KindMismatch(std::string(what) + ": chart point kind mismatch");
    if (!beta_zero_ && beta(x).is_zero())
        throw Precondition(std::string(what) + ": point lies on the removed hyperplane b");
}

ChartPoint chart_formula(const ChartPoint& x, const ChartPoint& y, const ChartPoint& z,
                         const ChartConfig& cfg) {
    cfg.require_point(x, "chart_formula x");
    cfg.require_point(y, "chart_formula y");
    cfg.require_point(z, "chart_formula z");
    ChartPoint w;
    w.coords.reserve(cfg.m());
    if (cfg.beta_zero()) {
        for (u32 i = 0; i < cfg.m(); ++i)
            w.coords.push_back(x.coords[i] - y.coords[i] + z.coords[i]);
        return w;
    }
    Scalar s = cfg.beta(z) * cfg.beta(y).inv();
    for (u32 i = 0; i < cfg.m(); ++i)
        w.coords.push_back(s * (x.coords[i] - y.coords[i]) + z.coords[i]);
    if (!cfg.admissible(w)) throw LatticeFault("ternary result left the carrier");
    return w;
}

Scalar beta_of_ternary(const ChartPoint& x, const ChartPoint& y, const ChartPoint& z,
                       const ChartConfig& cfg) {
    if (cfg.beta_zero())
        throw Precondition("beta_of_ternary needs distinct hyperplanes (beta != 0)");
    cfg.require_point(x, "beta_of_ternary x");
    cfg.require_point(y, "beta_of_ternary y");
    cfg.require_point(z, "beta_of_ternary z");
    Scalar v = (cfg.beta(z) * cfg.beta(y).inv()) * cfg.beta(x);
    if (v != cfg.beta(chart_formula(x, y, z, cfg)))
        throw LatticeFault("beta of ternary disagrees with the scalar product form");
    return v;
}

OriginChart rebase_at(const ChartConfig& cfg, const ChartPoint& y) {
    if (cfg.kind().ring == Ring::Oct)
        throw Precondition("rebase_at supports field kinds only");
    cfg.require_point(y, "rebase_at origin");
    OriginChart oc{cfg.kind(), cfg.m(), {}};
    if (cfg.beta_zero()) {
        oc.beta.assign(cfg.m(), Scalar::zero(cfg.kind()));
        return oc;
    }
    Scalar f = -cfg.beta(y).inv();
    for (u32 i = 0; i < cfg.m(); ++i) oc.beta.push_back(cfg.beta_coeffs()[i] * f);
    return oc;
}

ChartPoint rebase_point(const ChartPoint& y, const ChartPoint& t) {
    if (y.coords.size() != t.coords.size())
        throw Precondition("rebase_point: dimension mismatch");
    ChartPoint s;
    s.coords.reserve(t.coords.size());
    for (size_t i = 0; i < t.coords.size(); ++i) s.coords.push_back(t.coords[i] - y.coords[i]);
    return s;
}

Scalar OriginChart::beta_of(const ChartPoint& x) const {
    if (x.coords.size() != m) throw Precondition("chart point has wrong dimension");
    Scalar s = Scalar::zero(kind);
    for (u32 i = 0; i < m; ++i) {
        if (beta[i].is_zero()) continue;
        s = s + beta[i] * x.coords[i];
    }
    return s;
}

bool OriginChart::admissible(const ChartPoint& x) const {
    if (x.coords.size() != m) return false;
    for (const Scalar& c : x.coords)
        if (!(c.kind() == kind)) return false;
    // off b, which sits at { beta = 1 } in this normalization
    return !(Scalar::one(kind) - beta_of(x)).is_zero();
}

ChartPoint binary_with_origin(const ChartPoint& x, const ChartPoint& z, const OriginChart& oc) {
    if (!oc.admissible(x) || !oc.admissible(z))
        throw Precondition("binary_with_origin: operand outside the carrier");
    Scalar s = Scalar::one(oc.kind) - oc.beta_of(z);
    ChartPoint w;
    w.coords.reserve(oc.m);
    for (u32 i = 0; i < oc.m; ++i) w.coords.push_back(s * x.coords[i] + z.coords[i]);
    return w;
}

LatticeChart::LatticeChart(const Subspace& a, const Subspace& b)
    : p_(a.modulus()), n_(a.ambient()), a_(a), b_(b), cfg_(init_parts()) {}

ChartConfig LatticeChart::init_parts() {
    if (b_.modulus() != p_ || b_.ambient() != n_)
        throw Precondition("chart hyperplanes live in different spaces");
    if (n_ < 2 || a_.rank() != n_ - 1 || b_.rank() != n_ - 1)
        throw Precondition("chart needs hyperplanes of rank n-1");
    fa_ = normal_of_hyperplane(a_);
    fb_ = normal_of_hyperplane(b_);

    const bool same = (a_ == b_);
    origin_.clear();
    for (const Vec& v : normalized_vectors(p_, n_)) {
        u32 ca = dot(fa_, v, p_);
        if (ca == 0) continue;
        if (!same && dot(fb_, v, p_) != 0) continue;
        u32 s = fp_inv(ca, p_);
        Vec o(n_);
        for (u32 j = 0; j < n_; ++j) o[j] = fp_mul(v[j], s, p_);
        origin_ = std::move(o);
        break;
    }
    if (origin_.empty()) throw LatticeFault("no chart origin found");

    basis_ = a_.rows();
    for (const Vec& r : basis_) {
        u32 col = 0;
        while (r[col] == 0) ++col;
        pivots_.push_back(col);
    }

    std::vector<Scalar> beta;
    beta.reserve(basis_.size());
    for (const Vec& d : basis_) beta.push_back(Scalar::gf(p_, dot(fb_, d, p_)));
    bool all_zero = std::all_of(beta.begin(), beta.end(),
                                [](const Scalar& c) { return c.is_zero(); });
    if (same != all_zero) throw LatticeFault("chart form inconsistent with hyperplane pair");
    return ChartConfig(ScalarKind::gf(p_), n_ - 1, std::move(beta));
}

ChartPoint LatticeChart::embed(const Subspace& pt) const {
    if (pt.modulus() != p_ || pt.ambient() != n_ || pt.rank() != 1)
        throw Precondition("embed expects a point of the same space");
    const Vec& rep = pt.representative();
    u32 c = dot(fa_, rep, p_);
    if (c == 0) throw Precondition("embed: point lies on the chart hyperplane a");
    u32 s = fp_inv(c, p_);
    Vec v(n_);
    for (u32 j = 0; j < n_; ++j) v[j] = fp_mul(rep[j], s, p_);

    Vec d(n_);
    for (u32 j = 0; j < n_; ++j) d[j] = fp_sub(v[j], origin_[j], p_);
    ChartPoint t;
    t.coords.reserve(basis_.size());
    for (size_t i = 0; i < basis_.size(); ++i)
        t.coords.push_back(Scalar::gf(p_, d[pivots_[i]]));

    Vec back = origin_;
    for (size_t i = 0; i < basis_.size(); ++i) {
        u32 ti = t.coords[i].gf_val();
        if (ti == 0) continue;
        for (u32 j = 0; j < n_; ++j)
            back[j] = fp_add(back[j], fp_mul(ti, basis_[i][j], p_), p_);
    }
    if (back != v) throw LatticeFault("embed: coordinates do not reproduce the point");
    return t;
}

Subspace LatticeChart::lift(const ChartPoint& t) const {
    if (t.coords.size() != basis_.size()) throw Precondition("lift: wrong dimension");
    Vec v = origin_;
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (!(t.coords[i].kind() == ScalarKind::gf(p_)))
            throw KindMismatch("lift: coordinate kind mismatch");
        u32 ti = t.coords[i].gf_val();
        if (ti == 0) continue;
        for (u32 j = 0; j < n_; ++j) v[j] = fp_add(v[j], fp_mul(ti, basis_[i][j], p_), p_);
    }
    return Subspace::span(p_, n_, {v});
}

} // namespace tgeo
