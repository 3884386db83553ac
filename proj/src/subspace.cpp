#include "tgeo/subspace.hpp"

#include "tgeo/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tgeo {
namespace {

// In-place reduced row echelon form; returns the rank. Zero rows are removed.
u32 rref(std::vector<Vec>& rows, u32 p, u32 ncols) {
    u32 r = 0;
    for (u32 col = 0; col < ncols && r < rows.size(); ++col) {
        u32 piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        u32 s = fp_inv(rows[r][col], p);
        for (u32 j = col; j < ncols; ++j) rows[r][j] = fp_mul(rows[r][j], s, p);
        for (u32 i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            u32 f = rows[i][col];
            for (u32 j = 0; j < ncols; ++j)
                rows[i][j] = fp_sub(rows[i][j], fp_mul(f, rows[r][j], p), p);
        }
        ++r;
    }
    rows.resize(r);
    return r;
}

void check_vec(const Vec& v, u32 p, u32 n, const char* what) {
    if (v.size() != n) throw Precondition(std::string(what) + ": wrong vector length");
    for (u32 x : v)
        if (x >= p) throw Precondition(std::string(what) + ": entry not reduced mod p");
}

} // namespace

u32 dot(const Vec& f, const Vec& v, u32 p) {
    if (f.size() != v.size()) throw Precondition("dot: length mismatch");
    u64 s = 0;
    for (size_t i = 0; i < f.size(); ++i) s += static_cast<u64>(f[i]) * v[i];
    return static_cast<u32>(s % p);
}

Subspace Subspace::zero(u32 p, u32 n) {
    if (!is_prime(p)) throw Precondition("modulus must be prime");
    if (n == 0) throw Precondition("ambient dimension must be positive");
    return Subspace(p, n);
}

Subspace Subspace::full(u32 p, u32 n) {
    Subspace s = zero(p, n);
    for (u32 i = 0; i < n; ++i) {
        Vec e(n, 0);
        e[i] = 1;
        s.rows_.push_back(std::move(e));
    }
    return s;
}

Subspace Subspace::span(u32 p, u32 n, const std::vector<Vec>& gens) {
    Subspace s = zero(p, n);
    for (const Vec& g : gens) check_vec(g, p, n, "span");
    s.rows_ = gens;
    rref(s.rows_, p, n);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    check_vec(v, p_, n_, "contains");
    Vec w = v;
    for (const Vec& row : rows_) {
        u32 col = 0;
        while (col < n_ && row[col] == 0) ++col;
        if (col == n_ || w[col] == 0) continue;
        u32 f = w[col];
        for (u32 j = 0; j < n_; ++j) w[j] = fp_sub(w[j], fp_mul(f, row[j], p_), p_);
    }
    return std::all_of(w.begin(), w.end(), [](u32 x) { return x == 0; });
}

bool Subspace::leq(const Subspace& other) const {
    if (p_ != other.p_ || n_ != other.n_) throw Precondition("leq: ambient mismatch");
    return std::all_of(rows_.begin(), rows_.end(),
                       [&](const Vec& r) { return other.contains(r); });
}

bool Subspace::operator==(const Subspace& o) const {
    return p_ == o.p_ && n_ == o.n_ && rows_ == o.rows_;
}

const Vec& Subspace::representative() const {
    if (rows_.empty()) throw Precondition("representative of the zero space");
    return rows_[0];
}

std::vector<Vec> Subspace::elements() const {
    u64 count = 1;
    for (u32 i = 0; i < rank(); ++i) {
        count *= p_;
        if (count > 1000000) throw Precondition("elements: subspace too large");
    }
    std::vector<Vec> out;
    out.reserve(count);
    Vec coef(rank(), 0);
    for (u64 it = 0; it < count; ++it) {
        Vec v(n_, 0);
        for (u32 i = 0; i < rank(); ++i) {
            if (coef[i] == 0) continue;
            for (u32 j = 0; j < n_; ++j)
                v[j] = fp_add(v[j], fp_mul(coef[i], rows_[i][j], p_), p_);
        }
        out.push_back(std::move(v));
        for (u32 i = 0; i < rank(); ++i) { // odometer
            if (++coef[i] < p_) break;
            coef[i] = 0;
        }
    }
    return out;
}

std::string Subspace::key() const {
    std::ostringstream os;
    os << p_ << ":" << n_;
    for (const Vec& r : rows_) {
        os << "|";
        for (u32 x : r) os << x << ",";
    }
    return os.str();
}

std::string Subspace::str() const {
    std::ostringstream os;
    os << "span{";
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) os << "; ";
        os << "(";
        for (u32 j = 0; j < n_; ++j) {
            if (j) os << ",";
            os << rows_[i][j];
        }
        os << ")";
    }
    os << "}";
    return os.str();
}

Subspace meet(const Subspace& a, const Subspace& b) {
    if (a.modulus() != b.modulus() || a.ambient() != b.ambient())
        throw Precondition("meet: ambient mismatch");
    const u32 p = a.modulus(), n = a.ambient();
    // Zassenhaus: rref of [A|A; B|0]; rows with zero left half carry a basis
    // of the intersection in their right half.
    std::vector<Vec> m;
    for (const Vec& r : a.rows()) {
        Vec row(2 * n, 0);
        for (u32 j = 0; j < n; ++j) row[j] = row[n + j] = r[j];
        m.push_back(std::move(row));
    }
    for (const Vec& r : b.rows()) {
        Vec row(2 * n, 0);
        for (u32 j = 0; j < n; ++j) row[j] = r[j];
        m.push_back(std::move(row));
    }
    rref(m, p, 2 * n);
    std::vector<Vec> gens;
    for (const Vec& row : m) {
        bool left_zero = true;
        for (u32 j = 0; j < n; ++j)
            if (row[j] != 0) { left_zero = false; break; }
        if (!left_zero) continue;
        gens.emplace_back(row.begin() + n, row.end());
    }
    return Subspace::span(p, n, gens);
}

Subspace join(const Subspace& a, const Subspace& b) {
    if (a.modulus() != b.modulus() || a.ambient() != b.ambient())
        throw Precondition("join: ambient mismatch");
    std::vector<Vec> gens = a.rows();
    gens.insert(gens.end(), b.rows().begin(), b.rows().end());
    return Subspace::span(a.modulus(), a.ambient(), gens);
}

bool incident(const Subspace& a, const Subspace& b) {
    return a.leq(b) || b.leq(a);
}

Subspace nullspace(u32 p, u32 n, const std::vector<Vec>& rows_in) {
    std::vector<Vec> rows = rows_in;
    for (const Vec& r : rows)
        if (r.size() != n) throw Precondition("nullspace: wrong row length");
    u32 r = rref(rows, p, n);
    std::vector<u32> pivots;
    for (u32 i = 0; i < r; ++i) {
        u32 col = 0;
        while (rows[i][col] == 0) ++col;
        pivots.push_back(col);
    }
    std::vector<Vec> gens;
    u32 pi = 0;
    for (u32 col = 0; col < n; ++col) {
        if (pi < pivots.size() && pivots[pi] == col) { ++pi; continue; }
        Vec v(n, 0);
        v[col] = 1;
        for (u32 i = 0; i < r; ++i) v[pivots[i]] = fp_neg(rows[i][col], p);
        gens.push_back(std::move(v));
    }
    return Subspace::span(p, n, gens);
}

Subspace hyperplane_from_normal(u32 p, const Vec& f) {
    if (std::all_of(f.begin(), f.end(), [](u32 x) { return x == 0; }))
        throw Precondition("hyperplane normal must be nonzero");
    return nullspace(p, static_cast<u32>(f.size()), {f});
}

Vec normal_of_hyperplane(const Subspace& h) {
    const u32 n = h.ambient();
    if (h.rank() != n - 1) throw Precondition("normal_of_hyperplane: rank must be n-1");
    Subspace ns = nullspace(h.modulus(), n, h.rows());
    if (ns.rank() != 1) throw LatticeFault("hyperplane nullspace has wrong rank");
    Vec f = ns.representative();
    // rref already scales the leading entry to 1
    return f;
}

std::vector<Vec> normalized_vectors(u32 p, u32 n) {
    std::vector<Vec> out;
    // lex order: first nonzero coordinate equal to 1
    u64 total = 1;
    for (u32 i = 0; i < n; ++i) {
        total *= p;
        if (total > 100000000ull) throw Precondition("normalized_vectors: space too large");
    }
    Vec v(n, 0);
    for (u64 it = 1; it < total; ++it) {
        // increment as a base-p odometer with v[n-1] least significant
        for (u32 i = n; i-- > 0;) {
            if (++v[i] < p) break;
            v[i] = 0;
        }
        u32 lead = 0;
        while (lead < n && v[lead] == 0) ++lead;
        if (lead < n && v[lead] == 1) out.push_back(v);
    }
    return out;
}

std::vector<Subspace> points_of(const Subspace& s) {
    std::vector<Vec> reps;
    for (const Vec& v : s.elements()) {
        u32 lead = 0;
        while (lead < v.size() && v[lead] == 0) ++lead;
        if (lead < v.size() && v[lead] == 1) reps.push_back(v);
    }
    std::sort(reps.begin(), reps.end());
    std::vector<Subspace> out;
    out.reserve(reps.size());
    for (const Vec& v : reps) out.push_back(Subspace::span(s.modulus(), s.ambient(), {v}));
    return out;
}

ProjectiveSpace::ProjectiveSpace(u32 p_, u32 n_) : p(p_), n(n_) {
    if (!is_prime(p)) throw Precondition("modulus must be prime");
    if (n < 3) throw Precondition("projective dimension must be at least 2");
}

std::vector<Subspace> ProjectiveSpace::points() const {
    std::vector<Subspace> out;
    for (const Vec& v : normalized_vectors(p, n)) out.push_back(Subspace::span(p, n, {v}));
    return out;
}

std::vector<Subspace> ProjectiveSpace::hyperplanes() const {
    std::vector<Subspace> out;
    for (const Vec& f : normalized_vectors(p, n)) out.push_back(hyperplane_from_normal(p, f));
    return out;
}

std::vector<Subspace> all_subspaces(u32 p, u32 n) {
    u64 total = 1;
    for (u32 i = 0; i < n; ++i) total *= p;
    if (total > 256) throw Precondition("all_subspaces: space too large");
    std::vector<Vec> pts = normalized_vectors(p, n);
    std::map<std::string, Subspace> seen;
    Subspace z = Subspace::zero(p, n);
    seen.emplace(z.key(), z);
    std::vector<Subspace> frontier{z};
    while (!frontier.empty()) {
        std::vector<Subspace> next;
        for (const Subspace& s : frontier) {
            for (const Vec& v : pts) {
                if (s.contains(v)) continue;
                Subspace t = join(s, Subspace::span(p, n, {v}));
                auto [it, fresh] = seen.emplace(t.key(), t);
                if (fresh) next.push_back(t);
            }
        }
        frontier = std::move(next);
    }
    std::vector<Subspace> out;
    out.reserve(seen.size());
    for (auto& [k, s] : seen) out.push_back(s);
    std::sort(out.begin(), out.end(), [](const Subspace& a, const Subspace& b) {
        if (a.rank() != b.rank()) return a.rank() < b.rank();
        return a.key() < b.key();
    });
    return out;
}

} // namespace tgeo
