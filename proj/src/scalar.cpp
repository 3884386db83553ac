#include "tgeo/scalar.hpp"

#include "tgeo/error.hpp"

namespace tgeo {

std::string ScalarKind::str() const {
    switch (ring) {
        case Ring::GF: return "gf(" + std::to_string(p) + ")";
        case Ring::Rat: return "rational";
        case Ring::Oct: return "octonion";
    }
    return "?";
}

Scalar Scalar::gf(u32 p, long long val) {
    if (!is_prime(p)) throw Precondition("modulus must be prime, got " + std::to_string(p));
    long long r = val % static_cast<long long>(p);
    if (r < 0) r += p;
    return Scalar(GfElem{p, static_cast<u32>(r)});
}

Scalar Scalar::zero(ScalarKind k) {
    switch (k.ring) {
        case Ring::GF: return gf(k.p, 0);
        case Ring::Rat: return rat(Rational(0));
        case Ring::Oct: return oct(Octonion::zero());
    }
    throw Error("bad kind");
}

Scalar Scalar::one(ScalarKind k) {
    switch (k.ring) {
        case Ring::GF: return gf(k.p, 1);
        case Ring::Rat: return rat(Rational(1));
        case Ring::Oct: return oct(Octonion::one());
    }
    throw Error("bad kind");
}

ScalarKind Scalar::kind() const {
    if (auto* e = std::get_if<GfElem>(&v_)) return ScalarKind::gf(e->p);
    if (std::holds_alternative<Rational>(v_)) return ScalarKind::rat();
    return ScalarKind::oct();
}

bool Scalar::is_zero() const {
    if (auto* e = std::get_if<GfElem>(&v_)) return e->val == 0;
    if (auto* q = std::get_if<Rational>(&v_)) return *q == 0;
    return std::get<Octonion>(v_).is_zero();
}

void require_same_kind(const Scalar& a, const Scalar& b, const char* what) {
    if (!(a.kind() == b.kind()))
        throw KindMismatch(std::string(what) + ": " + a.kind().str() + " vs " + b.kind().str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_kind(*this, o, "add");
    if (auto* e = std::get_if<GfElem>(&v_))
        return Scalar(GfElem{e->p, fp_add(e->val, std::get<GfElem>(o.v_).val, e->p)});
    if (auto* q = std::get_if<Rational>(&v_))
        return Scalar(Rational(*q + std::get<Rational>(o.v_)));
    return Scalar(std::get<Octonion>(v_) + std::get<Octonion>(o.v_));
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_kind(*this, o, "sub");
    if (auto* e = std::get_if<GfElem>(&v_))
        return Scalar(GfElem{e->p, fp_sub(e->val, std::get<GfElem>(o.v_).val, e->p)});
    if (auto* q = std::get_if<Rational>(&v_))
        return Scalar(Rational(*q - std::get<Rational>(o.v_)));
    return Scalar(std::get<Octonion>(v_) - std::get<Octonion>(o.v_));
}

Scalar Scalar::operator-() const {
    if (auto* e = std::get_if<GfElem>(&v_)) return Scalar(GfElem{e->p, fp_neg(e->val, e->p)});
    if (auto* q = std::get_if<Rational>(&v_)) return Scalar(Rational(-*q));
    return Scalar(-std::get<Octonion>(v_));
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_kind(*this, o, "mul");
    if (auto* e = std::get_if<GfElem>(&v_))
        return Scalar(GfElem{e->p, fp_mul(e->val, std::get<GfElem>(o.v_).val, e->p)});
    if (auto* q = std::get_if<Rational>(&v_))
        return Scalar(Rational(*q * std::get<Rational>(o.v_)));
    return Scalar(std::get<Octonion>(v_) * std::get<Octonion>(o.v_));
}

Scalar Scalar::inv() const {
    if (auto* e = std::get_if<GfElem>(&v_)) return Scalar(GfElem{e->p, fp_inv(e->val, e->p)});
    if (auto* q = std::get_if<Rational>(&v_)) {
        if (*q == 0) throw DomainError("inverse of zero rational");
        return Scalar(Rational(1 / *q));
    }
    return Scalar(std::get<Octonion>(v_).inv());
}

Scalar Scalar::conj() const {
    if (auto* o = std::get_if<Octonion>(&v_)) return Scalar(o->conj());
    return *this;
}

Scalar Scalar::norm() const {
    if (auto* o = std::get_if<Octonion>(&v_)) {
        Octonion n;
        n.c[0] = o->norm();
        return Scalar(n);
    }
    return *this * *this;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(kind() == o.kind())) return false;
    return v_ == o.v_;
}

std::string Scalar::str() const {
    if (auto* e = std::get_if<GfElem>(&v_)) return std::to_string(e->val);
    if (auto* q = std::get_if<Rational>(&v_)) return rational_str(*q);
    return std::get<Octonion>(v_).str();
}

u32 Scalar::gf_val() const {
    if (auto* e = std::get_if<GfElem>(&v_)) return e->val;
    throw KindMismatch("gf_val on " + kind().str());
}

const Rational& Scalar::rat_val() const {
    if (auto* q = std::get_if<Rational>(&v_)) return *q;
    throw KindMismatch("rat_val on " + kind().str());
}

const Octonion& Scalar::oct_val() const {
    if (auto* o = std::get_if<Octonion>(&v_)) return *o;
    throw KindMismatch("oct_val on " + kind().str());
}

} // namespace tgeo
