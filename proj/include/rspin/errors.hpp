#pragma once

#include <stdexcept>
#include <string>

namespace rspin {

// All library failures derive from Error so callers (the CLI in particular)
// can map them to exit codes without string matching.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OrderMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

// Input data violates a structural invariant (non-idempotent projector,
// degenerate pairing, failed Frobenius axiom, ...).
struct InvalidInput : Error {
    using Error::Error;
};

struct Inadmissible : Error {
    using Error::Error;
};

struct Unsupported : Error {
    using Error::Error;
};

// A truncated computation did not stabilise within its budget.
struct Inconclusive : Error {
    using Error::Error;
};

}  // namespace rspin
