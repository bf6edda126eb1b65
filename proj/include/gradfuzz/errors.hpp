#pragma once

#include <stdexcept>
#include <string>

namespace gradfuzz {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad configuration or malformed input files (CLI exit code 2).
struct ConfigError : Error {
    using Error::Error;
};

// Target program failures: missing binary, protocol violation (CLI exit code 3).
struct TargetError : Error {
    using Error::Error;
};

// Non-finite values during training (CLI exit code 4).
struct NumericError : Error {
    using Error::Error;
};

}  // namespace gradfuzz
