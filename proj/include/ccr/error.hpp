#pragma once

#include <stdexcept>
#include <string>

namespace ccr {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (bad Cayley table, schema violation,
// out-of-range index, non-prime modulus, ...).  CLI maps this to exit code 2.
struct InputError : Error {
    using Error::Error;
};

// Operations on incompatible values (mixed scalar kinds, shape mismatches).
struct TypeError : Error {
    using Error::Error;
};

// Arithmetic failure (division by zero, singular system where a unique
// solution is required).
struct MathError : Error {
    using Error::Error;
};

// A required verification failed: an operation refused to run because a
// precondition check (axiom verdict, decomposition integrality, ...) did not
// hold.  CLI maps this to exit code 1.
struct CheckError : Error {
    using Error::Error;
};

}  // namespace ccr
