#pragma once

#include "tgeo/rational.hpp"

#include <array>
#include <string>

namespace tgeo {

// Octonion over the rationals, built by doubling Q three times:
//   (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)),  conj (a,b) = (conj a, -b).
// Coordinates c[0..7] follow the doubling order: c[i] sits at level bits of i,
// so c[0] is the real part and e1 e2 = e3, e1 e4 = e5, e2 e4 = e6, e3 e4 = e7.
// The resulting basis table is frozen in the unit tests.
struct Octonion {
    std::array<Rational, 8> c{};

    static Octonion zero();
    static Octonion one();
    static Octonion unit(int i); // e_i

    bool is_zero() const;
    bool operator==(const Octonion& o) const;
    bool operator!=(const Octonion& o) const { return !(*this == o); }

    Octonion operator+(const Octonion& o) const;
    Octonion operator-(const Octonion& o) const;
    Octonion operator-() const;
    Octonion operator*(const Octonion& o) const;

    Octonion conj() const;
    Rational norm() const; // x conj(x) = norm * e0, sum of squared coordinates
    Octonion inv() const;  // throws DomainError on zero

    std::string str() const; // e.g. "1 - 2/3 e5"
};

} // namespace tgeo
