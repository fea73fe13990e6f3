#pragma once

#include <stdexcept>
#include <string>

namespace plap {

/// Argument outside the mathematical domain of an operation (p <= 1, L <= 0, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Power-series precondition violated (non-zero constant term where zero is required).
class StructuralError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// ODE step control underflowed.
class IntegrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shooting residual has no sign change on the initial bracket.
class BracketError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative method stopped before reaching the requested tolerance.
class ToleranceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lookup of an inequality id that is not in the catalog.
class UnknownCaseError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

}  // namespace plap
