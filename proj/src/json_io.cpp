#include "tgeo/json_io.hpp"

#include "tgeo/error.hpp"

#include <fstream>
#include <sstream>

namespace tgeo {

Json kind_to_json(const ScalarKind& k) {
    switch (k.ring) {
    case Ring::GF: return Json{{"scalar", "gf"}, {"p", k.p}};
    case Ring::Rat: return Json{{"scalar", "rational"}};
    case Ring::Oct: return Json{{"scalar", "octonion"}};
    }
    throw DomainError("unreachable scalar ring");
}

ScalarKind kind_from_json(const Json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "rational")
            return ScalarKind::rat();
        if (s == "octonion")
            return ScalarKind::oct();
        if (s.rfind("gf:", 0) == 0) {
            try {
                return ScalarKind::gf(static_cast<u32>(std::stoul(s.substr(3))));
            } catch (const std::exception&) {
                throw ParseError("bad prime in scalar kind '" + s + "'");
            }
        }
        throw ParseError("unknown scalar kind '" + s + "'");
    }
    if (j.is_object() && j.contains("scalar")) {
        std::string s = j.at("scalar").get<std::string>();
        if (s == "gf") {
            if (!j.contains("p"))
                throw ParseError("scalar kind 'gf' needs \"p\"");
            return ScalarKind::gf(j.at("p").get<u32>());
        }
        return kind_from_json(Json(s));
    }
    throw ParseError("scalar kind must be a string or {\"scalar\": ...}");
}

Json scalar_to_json(const Scalar& s) {
    switch (s.kind().ring) {
    case Ring::GF: return Json{{"gf", s.kind().p}, {"val", s.gf_val()}};
    case Ring::Rat: return Json(rational_str(s.rat_val()));
    case Ring::Oct: {
        Json arr = Json::array();
        for (const auto& c : s.oct_val().c)
            arr.push_back(rational_str(c));
        return arr;
    }
    }
    throw DomainError("unreachable scalar ring");
}

namespace {

Rational rational_from_json(const Json& j, const char* what) {
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    throw ParseError(std::string(what) + ": expected an integer or \"n/d\" string");
}

} // namespace

Scalar scalar_from_json(const Json& j, const ScalarKind& kind) {
    switch (kind.ring) {
    case Ring::GF:
        if (j.is_number_integer())
            return Scalar::gf(kind.p, j.get<long long>());
        if (j.is_object() && j.contains("gf")) {
            if (j.at("gf").get<u32>() != kind.p)
                throw ParseError("scalar modulus disagrees with the declared kind");
            return Scalar::gf(kind.p, j.at("val").get<long long>());
        }
        throw ParseError("GF scalar: expected an integer or {\"gf\": p, \"val\": k}");
    case Ring::Rat:
        return Scalar::rat(rational_from_json(j, "rational scalar"));
    case Ring::Oct: {
        if (j.is_array()) {
            if (j.size() != 8)
                throw ParseError("octonion literal needs exactly 8 coordinates");
            Octonion o;
            for (int i = 0; i < 8; ++i)
                o.c[static_cast<size_t>(i)] = rational_from_json(j[static_cast<size_t>(i)], "octonion coordinate");
            return Scalar::oct(o);
        }
        Octonion o = Octonion::zero();
        o.c[0] = rational_from_json(j, "octonion scalar");
        return Scalar::oct(o);
    }
    }
    throw DomainError("unreachable scalar ring");
}

Json point_to_json(const ChartPoint& x) {
    Json arr = Json::array();
    for (const auto& c : x.coords)
        arr.push_back(scalar_to_json(c));
    return arr;
}

ChartPoint point_from_json(const Json& j, const ScalarKind& kind, u32 m) {
    if (!j.is_array())
        throw ParseError("chart point must be an array of coordinates");
    if (j.size() != m)
        throw ParseError("chart point has " + std::to_string(j.size()) + " coordinates, chart needs " + std::to_string(m));
    ChartPoint x;
    x.coords.reserve(m);
    for (const auto& c : j)
        x.coords.push_back(scalar_from_json(c, kind));
    return x;
}

Json subspace_to_json(const Subspace& s) {
    Json rows = Json::array();
    for (const auto& r : s.rows())
        rows.push_back(r);
    return Json{{"p", s.modulus()}, {"n", s.ambient()}, {"rows", rows}};
}

Subspace subspace_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("n"))
        throw ParseError("subspace must be {\"p\": .., \"n\": .., \"rows\": [..]}");
    u32 p = j.at("p").get<u32>();
    u32 n = j.at("n").get<u32>();
    std::vector<Vec> gens;
    if (j.contains("rows")) {
        for (const auto& row : j.at("rows")) {
            Vec v = row.get<Vec>();
            if (v.size() != n)
                throw ParseError("subspace row length disagrees with n");
            for (u32 c : v)
                if (c >= p)
                    throw ParseError("subspace coordinate out of range [0, p)");
            gens.push_back(std::move(v));
        }
    }
    return Subspace::span(p, n, gens);
}

Json report_to_json(const CheckReport& r) {
    Json witnesses = Json::array();
    for (const auto& w : r.witnesses) {
        Json args = Json::array();
        for (const auto& a : w.args)
            args.push_back(a);
        witnesses.push_back(Json{{"equation", w.equation},
                                 {"args", args},
                                 {"lhs", w.lhs},
                                 {"rhs", w.rhs}});
    }
    return Json{{"law", r.law},         {"structure", r.structure},
                {"mode", r.mode},       {"trials", r.trials},
                {"failures", r.failures}, {"pass", r.pass},
                {"seed", r.seed},       {"witnesses", witnesses}};
}

Json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(what + ": " + e.what());
    }
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write " + path);
    out << text;
    if (!out)
        throw ParseError("short write to " + path);
}

std::string json_dump(const Json& j) {
    return j.dump(2) + "\n";
}

} // namespace tgeo
