#pragma once

#include <stdexcept>
#include <string>

namespace qcwig {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OrderCapExceeded : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct NonAtomicSpectrum : Error {
    using Error::Error;
};
struct IndeterminateProjection : Error {
    using Error::Error;
};
struct NotLatticeSupported : Error {
    using Error::Error;
};
struct AperiodicCoefficients : Error {
    using Error::Error;
};
struct UnderResolved : Error {
    using Error::Error;
};
struct GridMismatch : Error {
    using Error::Error;
};

/// Malformed input; `field` names the offending JSON path.
struct InputError : Error {
    InputError(std::string field, const std::string& what)
        : Error(field + ": " + what), field(std::move(field)) {}
    std::string field;
};

}  // namespace qcwig
