#include "tgeo/rational.hpp"

#include "tgeo/error.hpp"

#include <cctype>

namespace tgeo {

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '-' && ch != '/')
            throw ParseError("bad character in rational literal: " + s);
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) {
    return q.get_str();
}

double rational_double(const Rational& q) {
    return q.get_d();
}

} // namespace tgeo
