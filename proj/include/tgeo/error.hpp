#pragma once

#include <stdexcept>
#include <string>

namespace tgeo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operands of a binary operation belong to different coordinate rings.
struct KindMismatch : Error {
    using Error::Error;
};

// Inversion of zero, division by zero and friends.
struct DomainError : Error {
    using Error::Error;
};

// Caller violated an operation precondition (degenerate input, wrong rank,
// point on a removed hyperplane, ...).
struct Precondition : Error {
    using Error::Error;
};

// An internal consistency check failed: rank anomaly in a lattice
// construction, witness set not a subspace. Indicates a bug, not bad input.
struct LatticeFault : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

} // namespace tgeo
