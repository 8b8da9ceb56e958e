#pragma once

#include <stdexcept>
#include <string>

namespace tracecode {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid user input: bad modulus, mixed fields, out-of-range parameters.
struct InvalidArgument : Error {
    using Error::Error;
};

// Operands belong to different field instances.
struct FieldMismatch : InvalidArgument {
    explicit FieldMismatch(const std::string& what = "operands belong to different fields")
        : InvalidArgument(what) {}
};

// An exhaustive computation would exceed its cost guard. Callers may retry
// with a larger budget; the CLI maps this to exit code 3.
struct CostGuardExceeded : Error {
    using Error::Error;
};

// A cross-check that should be unreachable failed; indicates a bug, not bad input.
struct InternalCheckFailure : Error {
    using Error::Error;
};

} // namespace tracecode
