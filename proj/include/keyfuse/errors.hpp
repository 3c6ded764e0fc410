#pragma once

#include <stdexcept>
#include <string>

namespace keyfuse {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A probability vector violates its invariants (negative entry, bad sum, wrong length).
struct ValidationError : Error {
    using Error::Error;
};

// Operands live on different key spaces.
struct DimensionError : Error {
    using Error::Error;
};

// A key value lies outside [0, M).
struct RangeError : Error {
    using Error::Error;
};

// The key space is too large for an exhaustive operation.
struct CapacityError : Error {
    using Error::Error;
};

// A malformed argument (empty list, non-positive count).
struct ArgumentError : Error {
    using Error::Error;
};

// A queue holds fewer keys than an operation consumes.
struct UnderflowError : Error {
    using Error::Error;
};

// A scalar parameter lies outside its mathematical domain.
struct DomainError : Error {
    using Error::Error;
};

} // namespace keyfuse
