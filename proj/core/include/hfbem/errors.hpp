#ifndef HFBEM_ERRORS_HPP
#define HFBEM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hfbem {

/// Base class for runtime failures raised by this library. Violations of
/// documented preconditions (bad arguments) throw std::invalid_argument
/// directly and are not part of this hierarchy.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A curve failed the strict convexity requirement (non-positive curvature).
class NotConvexError : public Error {
public:
    using Error::Error;
};

/// Shadow-boundary detection failed (wrong number of sign changes, degenerate
/// incidence, or a root finder that did not converge on a bracketed root).
class GeometryError : public Error {
public:
    using Error::Error;
};

/// An iterative numeric procedure (Newton inversion, series evaluation)
/// failed to converge within its iteration budget.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Inconsistent or out-of-range configuration, e.g. approximation-space
/// endpoints that are not ordered for the requested wavenumber.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// A requested discretization exceeds the configured resource cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Non-finite value encountered while filling a discrete operator.
class AssemblyError : public Error {
public:
    using Error::Error;
};

/// Dense solve failed or produced an unacceptable residual
/// (e.g. near-singular system at an interior resonance).
class SolverError : public Error {
public:
    using Error::Error;
};

/// A measurement routine could not extract the feature it looks for
/// (e.g. no boundary layer detected in a flat profile).
class DiagnosticError : public Error {
public:
    using Error::Error;
};

/// File output failure.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace hfbem

#endif // HFBEM_ERRORS_HPP
