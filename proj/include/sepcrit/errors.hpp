#pragma once

#include <stdexcept>
#include <string>

namespace sepcrit {

// Base class for all recoverable input/validation failures.  Anything else
// escaping the library (Eigen solver failure, allocation) is a plain
// std::exception and treated as an internal numeric error by callers.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotSquare : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct NotFinite : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct TraceNotOne : Error { using Error::Error; };
struct NotPSD : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct NotXClass : Error { using Error::Error; };
struct NotSquareDims : Error { using Error::Error; };
struct ParamOutOfRange : Error { using Error::Error; };
struct TraceConstraintViolated : Error { using Error::Error; };

} // namespace sepcrit
