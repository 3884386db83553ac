#include "tgeo/gfp.hpp"

#include "tgeo/error.hpp"

namespace tgeo {

bool is_prime(u32 p) {
    if (p < 2) return false;
    for (u64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

u32 fp_inv(u32 a, u32 p) {
    if (a % p == 0) throw DomainError("inverse of zero residue");
    // extended Euclid on (a, p)
    long long r0 = a % p, r1 = p, s0 = 1, s1 = 0;
    while (r1 != 0) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1;
        long long s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    long long inv = s0 % p;
    if (inv < 0) inv += p;
    return static_cast<u32>(inv);
}

} // namespace tgeo
