#pragma once

#include <stdexcept>

namespace cydouble {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Catalog file does not parse against the schema.
struct ParseError : Error {
    using Error::Error;
};

// Catalog parsed but a row invariant fails; the message names the row and
// the violated check.
struct ValidationError : Error {
    using Error::Error;
};

struct OddDegree : Error {
    using Error::Error;
};

struct OddLeadingCoefficient : Error {
    using Error::Error;
};

// c2 pairing came out with a denominator != 1; the catalog data is corrupt.
struct NonIntegralPairing : Error {
    using Error::Error;
};

// lambda is undefined when the c2 pairing vanishes identically.
struct ZeroChernClass : Error {
    using Error::Error;
};

struct MissingGeometry : Error {
    using Error::Error;
};

struct NotUnimodular : Error {
    using Error::Error;
};

struct UnknownId : Error {
    using Error::Error;
};

struct UnknownFormat : Error {
    using Error::Error;
};

}  // namespace cydouble
