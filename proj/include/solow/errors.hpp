#pragma once

#include <stdexcept>
#include <string>

namespace solow {

/// Argument outside the mathematical domain of an operation (e.g. ln_gamma(0)).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Model or configuration parameters that violate their invariants.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical solver could not produce a meaningful result.
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed config file or CSV input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace solow
