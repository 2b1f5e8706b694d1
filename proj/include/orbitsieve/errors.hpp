#pragma once

#include <stdexcept>
#include <string>

namespace orbitsieve {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad user input: violated invariants, malformed configs, unknown keys.
struct ValidationError : Error {
    using Error::Error;
};

/// Modulus rejected: not squarefree, or shares a factor with the bad set
/// or a normalization constant.
struct BadModulusError : Error {
    using Error::Error;
};

/// Enumeration exceeded a configured cap (frontier explosion guard).
struct ResourceLimitError : Error {
    using Error::Error;
};

/// Numeric precondition failed at runtime (ranges, grids, sieve constraints).
struct ConstraintError : Error {
    using Error::Error;
};

/// Too few usable samples for a fit.
struct InsufficientDataError : Error {
    using Error::Error;
};

/// A coordinate function value failed to be integral on an orbit point,
/// i.e. the preset and orbit do not match.
struct StrongPrimitivityError : Error {
    using Error::Error;
};

}  // namespace orbitsieve
