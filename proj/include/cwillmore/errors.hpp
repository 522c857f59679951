#pragma once

#include <stdexcept>
#include <string>

namespace cwillmore {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parallel curvature requested on the rotation axis without the pole limit.
class AxisSingularity : public Error {
public:
    using Error::Error;
};

class ParameterOutOfRange : public Error {
public:
    using Error::Error;
};

/// Adaptive refinement hit its depth limit; carries the best estimate.
class QuadratureFailure : public Error {
public:
    QuadratureFailure(const std::string& what, double estimate)
        : Error(what), estimate_(estimate) {}
    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

/// A chain of segments that is not C1, not closed, or otherwise malformed.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Newton (or bisection) did not converge; `last` holds the final iterate norm.
class SolverError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

/// Bump amplitude leaves the embedded/confined regime.
class AmplitudeError : public Error {
public:
    using Error::Error;
};

/// Requested target (area) cannot be reached with the given parameters.
class RangeError : public Error {
public:
    using Error::Error;
};

/// A bound that is only valid for confined surfaces was requested on an
/// unconfined one.
class NotConfined : public Error {
public:
    using Error::Error;
};

class SchemaError : public Error {
public:
    using Error::Error;
};

}  // namespace cwillmore
