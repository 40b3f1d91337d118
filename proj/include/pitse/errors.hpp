#pragma once

#include <stdexcept>
#include <string>

namespace pitse {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape / dimension mismatches (names the offending layer or operand).
struct DimensionError : Error {
    using Error::Error;
};

// Bad user configuration (out-of-range rate, unknown mode, ...).
struct ConfigError : Error {
    using Error::Error;
};

// Malformed input files or inconsistent data.
struct DataError : Error {
    using Error::Error;
};

// File parse failures; carries line/column context in the message.
struct ParseError : DataError {
    using DataError::DataError;
};

// Non-finite values, CFL violations, diverged training.
struct NumericError : Error {
    using Error::Error;
};

}  // namespace pitse
