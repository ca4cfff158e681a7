#pragma once

#include <stdexcept>
#include <string>

namespace oplab {

/// Base class for all oplab errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidDimensionError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct NonHermitianError : Error {
    NonHermitianError(double defect, double tolerance)
        : Error("hermiticity defect " + std::to_string(defect) + " exceeds tolerance " +
                std::to_string(tolerance)),
          defect(defect) {}
    double defect;
};

/// Thrown by context_from when a generating pair fails to commute.
struct IncompatibleGeneratorsError : Error {
    IncompatibleGeneratorsError(std::string first, std::string second, double commutator_norm)
        : Error("generators '" + first + "' and '" + second +
                "' do not commute: ||[A,B]||_F = " + std::to_string(commutator_norm)),
          first(std::move(first)),
          second(std::move(second)),
          commutator_norm(commutator_norm) {}
    std::string first;
    std::string second;
    double commutator_norm;
};

/// Observable is not diagonal in the context basis; one trial serves only
/// mutually commuting observables.
struct NotInContextError : Error {
    using Error::Error;
};

struct InconsistentExtensionError : Error {
    using Error::Error;
};

struct NumericalFailureError : Error {
    using Error::Error;
};

}  // namespace oplab
