#pragma once

#include <cstdint>

namespace tgeo {

// Residue arithmetic mod a small prime p. Values are kept in [0, p).
using u32 = std::uint32_t;
using u64 = std::uint64_t;

bool is_prime(u32 p);

inline u32 fp_add(u32 a, u32 b, u32 p) {
    u32 s = a + b;
    return s >= p ? s - p : s;
}

inline u32 fp_sub(u32 a, u32 b, u32 p) {
    return a >= b ? a - b : a + p - b;
}

inline u32 fp_neg(u32 a, u32 p) {
    return a == 0 ? 0 : p - a;
}

inline u32 fp_mul(u32 a, u32 b, u32 p) {
    return static_cast<u32>((static_cast<u64>(a) * b) % p);
}

// Throws DomainError on a == 0.
u32 fp_inv(u32 a, u32 p);

} // namespace tgeo
