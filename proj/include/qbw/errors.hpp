// errors.hpp - exception types shared by all qbw modules

#pragma once

#include <stdexcept>
#include <string>

namespace qbw {

// Bad arguments, unknown names, malformed input files. CLI exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Input matrix violates a structural precondition (e.g. not Hermitian).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Anything that goes wrong inside a numerical routine. CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Density matrix has an eigenvalue below the accepted round-off floor.
class PositivityError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class IntegrationInstabilityError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

// Liouvillian kernel is more than one-dimensional.
class NonUniqueSteadyStateError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class SolverFailureError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace qbw
