#pragma once

#include <stdexcept>
#include <string>

namespace dicube {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct NotInComplex : Error {
    using Error::Error;
};

struct OrderViolation : Error {
    using Error::Error;
};

struct NotAVertex : Error {
    using Error::Error;
};

struct NotFreePair : Error {
    using Error::Error;
};

struct NotMinimal : Error {
    using Error::Error;
};

struct InvalidProgram : Error {
    using Error::Error;
};

struct UnknownBuiltin : Error {
    using Error::Error;
};

struct UnsupportedDimension : Error {
    using Error::Error;
};

} // namespace dicube
