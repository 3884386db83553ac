#include "tgeo/octonion.hpp"

#include "tgeo/error.hpp"

namespace tgeo {
namespace {

// One doubling step on coordinate slices of width n:
//   out = (ac - conj(d) b, da + b conj(c))
// conj on a slice negates everything but its first coordinate.
void cd_conj(Rational* x, int n) {
    for (int i = 1; i < n; ++i) x[i] = -x[i];
}

void cd_mul(const Rational* x, const Rational* y, Rational* out, int n) {
    if (n == 1) {
        out[0] = x[0] * y[0];
        return;
    }
    const int h = n / 2;
    const Rational* a = x;
    const Rational* b = x + h;
    const Rational* c = y;
    const Rational* d = y + h;

    std::array<Rational, 4> t1, t2, cc;
    cd_mul(a, c, t1.data(), h); // ac
    for (int i = 0; i < h; ++i) cc[i] = d[i];
    cd_conj(cc.data(), h);
    cd_mul(cc.data(), b, t2.data(), h); // conj(d) b
    for (int i = 0; i < h; ++i) out[i] = t1[i] - t2[i];

    cd_mul(d, a, t1.data(), h); // da
    for (int i = 0; i < h; ++i) cc[i] = c[i];
    cd_conj(cc.data(), h);
    cd_mul(b, cc.data(), t2.data(), h); // b conj(c)
    for (int i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

} // namespace

Octonion Octonion::zero() {
    return Octonion{};
}

Octonion Octonion::one() {
    return unit(0);
}

Octonion Octonion::unit(int i) {
    if (i < 0 || i > 7) throw Precondition("octonion unit index out of range");
    Octonion o;
    o.c[i] = 1;
    return o;
}

bool Octonion::is_zero() const {
    for (const auto& v : c)
        if (v != 0) return false;
    return true;
}

bool Octonion::operator==(const Octonion& o) const {
    return c == o.c;
}

Octonion Octonion::operator+(const Octonion& o) const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

Octonion Octonion::operator-(const Octonion& o) const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = c[i] - o.c[i];
    return r;
}

Octonion Octonion::operator-() const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = -c[i];
    return r;
}

Octonion Octonion::operator*(const Octonion& o) const {
    Octonion r;
    cd_mul(c.data(), o.c.data(), r.c.data(), 8);
    return r;
}

Octonion Octonion::conj() const {
    Octonion r = *this;
    cd_conj(r.c.data(), 8);
    return r;
}

Rational Octonion::norm() const {
    Rational s = 0;
    for (const auto& v : c) s += v * v;
    return s;
}

Octonion Octonion::inv() const {
    Rational nn = norm();
    if (nn == 0) throw DomainError("inverse of zero octonion");
    Octonion r = conj();
    for (auto& v : r.c) v /= nn;
    return r;
}

std::string Octonion::str() const {
    std::string s;
    for (int i = 0; i < 8; ++i) {
        if (c[i] == 0) continue;
        Rational v = c[i];
        if (s.empty()) {
            if (v < 0) {
                s += "-";
                v = -v;
            }
        } else {
            s += v < 0 ? " - " : " + ";
            if (v < 0) v = -v;
        }
        if (i == 0) {
            s += rational_str(v);
        } else {
            if (v != 1) s += rational_str(v) + " ";
            s += "e" + std::to_string(i);
        }
    }
    return s.empty() ? "0" : s;
}

} // namespace tgeo
