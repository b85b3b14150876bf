#pragma once

#include <stdexcept>
#include <string>

namespace burnside {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A configured budget (element cap, subgroup cap, enumeration cap, ...) was hit.
struct BudgetExceeded : Error {
    using Error::Error;
};

/// Unparseable or invalid input (group files, permutation image arrays, specs).
struct MalformedInput : Error {
    using Error::Error;
};

/// The alleged subgroup is not contained in the ambient group.
struct InvalidSubgroup : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// Zero diagonal entry where a nonsingular triangular matrix was required.
struct SingularMatrix : Error {
    using Error::Error;
};

/// A residue that must be a unit of Z/n has a common factor with n.
struct NotAUnit : Error {
    using Error::Error;
};

/// A certificate check failed; names the check.
struct CheckFailed : Error {
    using Error::Error;
};

/// int64 arithmetic would have wrapped.
struct OverflowError : Error {
    using Error::Error;
};

/// Invariant violation that signals a bug, not a user error.
struct InternalError : Error {
    using Error::Error;
};

} // namespace burnside
