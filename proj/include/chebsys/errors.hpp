#pragma once

#include <stdexcept>
#include <string>

namespace chebsys {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejected user input (bad parameters, malformed rational string, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// t_r is not of the form (-1)^k z^ell h(z^{m+1}).
class FactorizationViolation : public Error {
public:
    using Error::Error;
};

/// Neither sign variant of the h-recurrence holds at some index.
class NoVariantMatches : public Error {
public:
    using Error::Error;
};

/// Branch solver failed to reach its residual tolerance.
class SolverDivergence : public Error {
public:
    using Error::Error;
};

/// Two branches share a modulus (within tolerance), so the branch-sum
/// coefficients are ill-conditioned.
class DegenerateBranches : public Error {
public:
    using Error::Error;
};

/// The point lies on the cut set of the dominant branch.
class OnStarSet : public Error {
public:
    using Error::Error;
};

/// Polynomial root finder did not converge.
class ConvergenceFailure : public Error {
public:
    ConvergenceFailure(const std::string& what, std::string polynomial)
        : Error(what), polynomial_(std::move(polynomial)) {}

    const std::string& polynomial() const noexcept { return polynomial_; }

private:
    std::string polynomial_;
};

} // namespace chebsys
