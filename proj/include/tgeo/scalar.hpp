#pragma once

#include "tgeo/gfp.hpp"
#include "tgeo/octonion.hpp"
#include "tgeo/rational.hpp"

#include <string>
#include <variant>

namespace tgeo {

enum class Ring { GF, Rat, Oct };

// Which coordinate ring a Scalar lives in; p is meaningful for GF only.
struct ScalarKind {
    Ring ring = Ring::Rat;
    u32 p = 0;

    static ScalarKind gf(u32 p) { return {Ring::GF, p}; }
    static ScalarKind rat() { return {Ring::Rat, 0}; }
    static ScalarKind oct() { return {Ring::Oct, 0}; }

    bool operator==(const ScalarKind&) const = default;
    std::string str() const;
};

// Tagged value in one of the three coordinate rings: a prime field GF(p),
// the rationals, or the rational octonions. Mixed-kind arithmetic throws
// KindMismatch; there are no implicit coercions.
class Scalar {
public:
    Scalar() : v_(Rational(0)) {}

    static Scalar gf(u32 p, long long val);
    static Scalar rat(Rational q) { return Scalar(std::move(q)); }
    static Scalar oct(Octonion o) { return Scalar(std::move(o)); }
    static Scalar zero(ScalarKind k);
    static Scalar one(ScalarKind k);

    ScalarKind kind() const;
    bool is_zero() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;

    Scalar inv() const;  // throws DomainError on zero
    Scalar conj() const; // identity on GF and Rat
    Scalar norm() const; // x * conj(x); central, same kind

    // False on kind mismatch rather than throwing: reports compare freely.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

    u32 gf_val() const;
    const Rational& rat_val() const;
    const Octonion& oct_val() const;

private:
    struct GfElem {
        u32 p;
        u32 val;
        bool operator==(const GfElem&) const = default;
    };
    explicit Scalar(GfElem e) : v_(e) {}
    explicit Scalar(Rational q) : v_(std::move(q)) {}
    explicit Scalar(Octonion o) : v_(std::move(o)) {}

    std::variant<GfElem, Rational, Octonion> v_;
};

void require_same_kind(const Scalar& a, const Scalar& b, const char* what);

} // namespace tgeo
