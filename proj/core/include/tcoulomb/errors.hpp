#pragma once

#include <stdexcept>
#include <string>

namespace tcoulomb {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad arguments or precondition violations (CLI exit code 1).
class UsageError : public Error {
public:
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

/// A mathematical guarantee of the model failed to hold (CLI exit code 2).
/// Examples: fewer real truncation roots than the degree demands, a node
/// count that disagrees with the root index, roots too close to be simple.
class IntegrityError : public Error {
public:
    explicit IntegrityError(const std::string& msg) : Error(msg) {}
};

/// An iterative method exhausted its budget (CLI exit code 3).
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
    ConvergenceError(const std::string& msg, double best)
        : Error(msg), best_estimate(best), has_best_estimate(true) {}

    double best_estimate = 0.0;
    bool has_best_estimate = false;
};

/// Requested state is not bound (or too close to threshold to resolve).
class UnboundStateError : public ConvergenceError {
public:
    explicit UnboundStateError(const std::string& msg) : ConvergenceError(msg) {}
};

/// Interpolation outside the exact-point hull is refused.
class HullError : public UsageError {
public:
    explicit HullError(const std::string& msg) : UsageError(msg) {}
};

/// A computation would exceed a configured size limit (polynomial degree).
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

}  // namespace tcoulomb
