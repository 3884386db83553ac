#include "tgeo/gamma.hpp"

#include "tgeo/error.hpp"

namespace tgeo {
namespace {

void check_same_space(std::initializer_list<const Subspace*> ss) {
    const Subspace* first = *ss.begin();
    for (const Subspace* s : ss)
        if (s->modulus() != first->modulus() || s->ambient() != first->ambient())
            throw Precondition("operands live in different spaces");
}

u32 encode_vec(const Vec& v, u32 p) {
    u32 code = 0;
    for (u32 d : v) code = code * p + d;
    return code;
}

Vec decode_vec(u32 code, u32 p, u32 n) {
    Vec v(n);
    for (u32 j = n; j-- > 0;) {
        v[j] = code % p;
        code /= p;
    }
    return v;
}

} // namespace

Subspace gamma_bruteforce(const Subspace& x, const Subspace& a, const Subspace& y,
                          const Subspace& b, const Subspace& z) {
    check_same_space({&x, &a, &y, &b, &z});
    const u32 p = x.modulus(), n = x.ambient();
    u64 q64 = 1;
    for (u32 i = 0; i < n; ++i) q64 *= p;
    if (q64 > 81) throw Precondition("gamma_bruteforce: ambient space too large");
    const u32 q = static_cast<u32>(q64);

    auto mask_of = [&](const Subspace& s) {
        std::vector<u32> m(q, 0);
        for (const Vec& v : s.elements()) m[encode_vec(v, p)] = 1;
        return m;
    };
    std::vector<u32> in_x = mask_of(x), in_y = mask_of(y), in_b = mask_of(b), in_z = mask_of(z);
    std::vector<u32> alphas, xis;
    for (const Vec& v : a.elements()) alphas.push_back(encode_vec(v, p));
    for (const Vec& v : x.elements()) xis.push_back(encode_vec(v, p));
    if (static_cast<u64>(alphas.size()) * xis.size() * q > 100000000ull)
        throw Precondition("gamma_bruteforce: instance too large");

    // subtraction table
    std::vector<u32> sub_tab(static_cast<size_t>(q) * q);
    for (u32 i = 0; i < q; ++i) {
        Vec vi = decode_vec(i, p, n);
        for (u32 j = 0; j < q; ++j) {
            Vec vj = decode_vec(j, p, n);
            Vec d(n);
            for (u32 k = 0; k < n; ++k) d[k] = fp_sub(vi[k], vj[k], p);
            sub_tab[static_cast<size_t>(i) * q + j] = encode_vec(d, p);
        }
    }

    std::vector<u32> witness(q, 0);
    for (u32 w = 0; w < q; ++w) {
        bool hit = false;
        for (u32 alpha : alphas) {
            if (!in_z[sub_tab[static_cast<size_t>(w) * q + alpha]]) continue;
            for (u32 xi : xis) {
                if (in_b[sub_tab[static_cast<size_t>(w) * q + xi]] &&
                    in_y[sub_tab[static_cast<size_t>(xi) * q + alpha]]) {
                    hit = true;
                    break;
                }
            }
            if (hit) break;
        }
        witness[w] = hit ? 1 : 0;
    }

    if (!witness[0]) throw LatticeFault("witness set misses zero");
    std::vector<u32> members;
    for (u32 w = 0; w < q; ++w)
        if (witness[w]) members.push_back(w);
    // closure under addition (scalar multiples are iterated additions)
    std::vector<u32> add_tab(static_cast<size_t>(q) * q);
    for (u32 i = 0; i < q; ++i) {
        Vec vi = decode_vec(i, p, n);
        for (u32 j = 0; j < q; ++j) {
            Vec vj = decode_vec(j, p, n);
            Vec s(n);
            for (u32 k = 0; k < n; ++k) s[k] = fp_add(vi[k], vj[k], p);
            add_tab[static_cast<size_t>(i) * q + j] = encode_vec(s, p);
        }
    }
    for (u32 i : members)
        for (u32 j : members)
            if (!witness[add_tab[static_cast<size_t>(i) * q + j]])
                throw LatticeFault("witness set is not a submodule");

    std::vector<Vec> gens;
    for (u32 w : members) gens.push_back(decode_vec(w, p, n));
    return Subspace::span(p, n, gens);
}

Subspace gamma_lattice_generic(const Subspace& x, const Subspace& a, const Subspace& y,
                               const Subspace& b, const Subspace& z) {
    check_same_space({&x, &a, &y, &b, &z});
    return meet(join(meet(join(x, y), a), z), join(meet(join(z, y), b), x));
}

bool general_position(const Subspace& x, const Subspace& y, const Subspace& z) {
    return meet(x, join(y, z)).rank() == 0 || meet(y, join(x, z)).rank() == 0 ||
           meet(z, join(x, y)).rank() == 0;
}

bool general_position_sufficient(const Subspace& x, const Subspace& y, const Subspace& z) {
    return meet(x, join(y, z)).rank() == 0 || meet(z, join(x, y)).rank() == 0 ||
           (meet(y, join(x, z)).rank() == 0 && meet(x, z).rank() == 0);
}

bool common_complement(const Subspace& u, const Subspace& s) {
    return meet(u, s).rank() == 0 && join(u, s).rank() == u.ambient();
}

namespace {

void check_collinear_inputs(const Subspace& x, const Subspace& a, const Subspace& y,
                            const Subspace& b, const Subspace& z, const Subspace& u) {
    check_same_space({&x, &a, &y, &b, &z, &u});
    if (meet(z, join(x, y)) != z) // z <= x|y
        throw Precondition("collinear form needs z inside x|y");
    if (meet(u, join(x, y)).rank() != 0)
        throw Precondition("auxiliary u must meet x|y trivially");
    if (!common_complement(u, a) || !common_complement(u, b))
        throw Precondition("auxiliary u must complement both a and b");
}

} // namespace

Subspace gamma_collinear_part2(const Subspace& x, const Subspace& a, const Subspace& y,
                               const Subspace& b, const Subspace& z, const Subspace& u) {
    check_collinear_inputs(x, a, y, b, z, u);
    Subspace p = gamma_lattice_generic(x, a, y, b, u);
    return meet(join(meet(join(p, u), a), z), join(meet(join(z, u), b), p));
}

Subspace gamma_collinear_part3(const Subspace& x, const Subspace& a, const Subspace& y,
                               const Subspace& b, const Subspace& z, const Subspace& u) {
    check_collinear_inputs(x, a, y, b, z, u);
    const u32 n = x.ambient();
    if (a.rank() != n - 1 || b.rank() != n - 1)
        throw Precondition("part3 needs hyperplanes a, b");
    if (x.rank() != 1 || y.rank() != 1 || z.rank() != 1)
        throw Precondition("part3 needs one-dimensional x, y, z");
    if (x == y) throw Precondition("part3 needs x != y");
    Subspace p = gamma_lattice_generic(x, a, y, b, u);
    return meet(join(x, y), join(meet(join(z, u), b), p));
}

GammaWorld::GammaWorld(u32 p, u32 n) : p_(p), n_(n) {
    u64 q64 = 1;
    for (u32 i = 0; i < n; ++i) q64 *= p;
    if (q64 > 64) throw Precondition("GammaWorld: ambient space too large for masks");
    q_ = static_cast<u32>(q64);

    subs_ = all_subspaces(p_, n_);
    for (size_t i = 0; i < subs_.size(); ++i) idx_[subs_[i].key()] = static_cast<int>(i);

    const size_t ns = subs_.size();
    meet_.assign(ns * ns, -1);
    join_.assign(ns * ns, -1);
    for (size_t i = 0; i < ns; ++i) {
        for (size_t j = 0; j < ns; ++j) {
            meet_[i * ns + j] = idx_.at(meet(subs_[i], subs_[j]).key());
            join_[i * ns + j] = idx_.at(join(subs_[i], subs_[j]).key());
        }
    }

    mask_.assign(ns, 0);
    elems_.assign(ns, {});
    for (size_t i = 0; i < ns; ++i) {
        for (const Vec& v : subs_[i].elements()) {
            u32 code = encode_vec(v, p_);
            mask_[i] |= u64(1) << code;
            elems_[i].push_back(code);
        }
        mask_to_idx_[mask_[i]] = static_cast<int>(i);
    }
    zero_ = idx_.at(Subspace::zero(p_, n_).key());
    full_ = idx_.at(Subspace::full(p_, n_).key());

    add_.assign(static_cast<size_t>(q_) * q_, 0);
    sub_tab_.assign(static_cast<size_t>(q_) * q_, 0);
    for (u32 i = 0; i < q_; ++i) {
        Vec vi = decode_vec(i, p_, n_);
        for (u32 j = 0; j < q_; ++j) {
            Vec vj = decode_vec(j, p_, n_);
            Vec s(n_), d(n_);
            for (u32 k = 0; k < n_; ++k) {
                s[k] = fp_add(vi[k], vj[k], p_);
                d[k] = fp_sub(vi[k], vj[k], p_);
            }
            add_[static_cast<size_t>(i) * q_ + j] = encode_vec(s, p_);
            sub_tab_[static_cast<size_t>(i) * q_ + j] = encode_vec(d, p_);
        }
    }
}

int GammaWorld::index_of(const Subspace& s) const {
    auto it = idx_.find(s.key());
    if (it == idx_.end()) throw Precondition("subspace not in this world");
    return it->second;
}

int GammaWorld::gamma_brute(int x, int a, int y, int b, int z) const {
    const u64 my = mask_[y], mb = mask_[b], mz = mask_[z];
    u64 w_mask = 0;
    for (u32 w = 0; w < q_; ++w) {
        bool hit = false;
        for (u32 alpha : elems_[a]) {
            if (!(mz >> sub_tab_[static_cast<size_t>(w) * q_ + alpha] & 1)) continue;
            for (u32 xi : elems_[x]) {
                if ((mb >> sub_tab_[static_cast<size_t>(w) * q_ + xi] & 1) &&
                    (my >> sub_tab_[static_cast<size_t>(xi) * q_ + alpha] & 1)) {
                    hit = true;
                    break;
                }
            }
            if (hit) break;
        }
        if (hit) w_mask |= u64(1) << w;
    }
    auto it = mask_to_idx_.find(w_mask);
    if (it == mask_to_idx_.end()) throw LatticeFault("witness set is not a submodule");
    return it->second;
}

int GammaWorld::gamma_generic(int x, int a, int y, int b, int z) const {
    int left = join_i(meet_i(join_i(x, y), a), z);
    int right = join_i(meet_i(join_i(z, y), b), x);
    return meet_i(left, right);
}

bool GammaWorld::general_position_i(int x, int y, int z) const {
    return meet_i(x, join_i(y, z)) == zero_ || meet_i(y, join_i(x, z)) == zero_ ||
           meet_i(z, join_i(x, y)) == zero_;
}

bool GammaWorld::general_position_sufficient_i(int x, int y, int z) const {
    return meet_i(x, join_i(y, z)) == zero_ || meet_i(z, join_i(x, y)) == zero_ ||
           (meet_i(y, join_i(x, z)) == zero_ && meet_i(x, z) == zero_);
}

int GammaWorld::part2_i(int x, int a, int y, int b, int z, int u) const {
    int p = gamma_generic(x, a, y, b, u);
    int left = join_i(meet_i(join_i(p, u), a), z);
    int right = join_i(meet_i(join_i(z, u), b), p);
    return meet_i(left, right);
}

int GammaWorld::part3_i(int x, int a, int y, int b, int z, int u) const {
    int p = gamma_generic(x, a, y, b, u);
    return meet_i(join_i(x, y), join_i(meet_i(join_i(z, u), b), p));
}

} // namespace tgeo
