#include "tgeo/sampling.hpp"

#include "tgeo/error.hpp"

namespace tgeo {

u64 derive_seed(u64 base, std::string_view tag) {
    u64 h = 14695981039346656037ULL;
    auto mix = [&h](unsigned char byte) {
        h ^= byte;
        h *= 1099511628211ULL;
    };
    for (int i = 0; i < 8; ++i)
        mix(static_cast<unsigned char>(base >> (8 * i)));
    for (char ch : tag)
        mix(static_cast<unsigned char>(ch));
    return h;
}

Rational sample_rational(Rng& rng) {
    int num = static_cast<int>(rng.in_range(-9, 9));
    int den = static_cast<int>(rng.in_range(1, 3));
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Octonion sample_octonion(Rng& rng) {
    Octonion o;
    for (auto& c : o.c)
        c = sample_rational(rng);
    return o;
}

Scalar sample_scalar(ScalarKind kind, Rng& rng) {
    switch (kind.ring) {
    case Ring::GF:
        return Scalar::gf(kind.p, static_cast<long long>(rng.below(kind.p)));
    case Ring::Rat:
        return Scalar::rat(sample_rational(rng));
    case Ring::Oct:
        return Scalar::oct(sample_octonion(rng));
    }
    throw DomainError("unknown scalar kind");
}

Scalar sample_invertible_scalar(ScalarKind kind, Rng& rng) {
    for (int tries = 0; tries < 1000; ++tries) {
        Scalar s = sample_scalar(kind, rng);
        if (!s.is_zero())
            return s;
    }
    throw DomainError("sampler failed to find an invertible scalar");
}

ChartPoint sample_chart_point(const ChartConfig& cfg, Rng& rng) {
    for (int tries = 0; tries < 1000; ++tries) {
        ChartPoint x;
        x.coords.reserve(cfg.m());
        for (u32 i = 0; i < cfg.m(); ++i)
            x.coords.push_back(sample_scalar(cfg.kind(), rng));
        if (cfg.admissible(x))
            return x;
    }
    throw DomainError("sampler failed to find an admissible chart point");
}

} // namespace tgeo
