#pragma once

#include "tgeo/chart.hpp"
#include "tgeo/scalar.hpp"

#include <random>
#include <string_view>

namespace tgeo {

// Deterministic randomness for sampled law checks. mt19937_64 plus modulo
// bounding is pinned by the standard, so identical seeds give identical
// streams on every platform (std::uniform_int_distribution would not).
class Rng {
public:
    explicit Rng(u64 seed) : eng_(seed) {}

    u64 next() { return eng_(); }
    u64 below(u64 bound) { return eng_() % bound; } // bound > 0
    long long in_range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<u64>(hi - lo + 1)));
    }

private:
    std::mt19937_64 eng_;
};

// FNV-1a over the base seed bytes then the tag; gives every checker its own
// stream while keeping the whole run reproducible from one root seed.
u64 derive_seed(u64 base, std::string_view tag);

// Small numerators and denominators keep octonion chart arithmetic (nested
// inverses of norm sums) fast while exercising genuine fractions.
Rational sample_rational(Rng& rng);
Octonion sample_octonion(Rng& rng);
Scalar sample_scalar(ScalarKind kind, Rng& rng);
Scalar sample_invertible_scalar(ScalarKind kind, Rng& rng);

// Uniform-ish chart point with invertible beta; retries until admissible.
ChartPoint sample_chart_point(const ChartConfig& cfg, Rng& rng);

} // namespace tgeo
