#pragma once

#include <stdexcept>
#include <string>

namespace shockprof {

// Precondition violated by caller-supplied values (CLI exit code 1).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Amplitude parameter outside the open interval (3/4, 1).
class NoShockError : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

// A characteristic speed or eigenvalue too close to zero to sign.
class DegenerateClassification : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// det B vanishes at the point where B^{-1} A was requested.
class SingularLinearization : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Integrator or root finder could not make progress (CLI exit code 2).
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace shockprof
