#pragma once

#include <stdexcept>
#include <string>

namespace forel {

// Base type for everything this library throws.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidGameError : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

// A vertex has more than one predecessor.
struct OnePredecessorViolation : Error {
    using Error::Error;
};

struct DisconnectedError : Error {
    using Error::Error;
};

// Payoff matrix with vanishing mixed difference.
struct NonGenericError : Error {
    using Error::Error;
};

struct NotCyclicError : Error {
    using Error::Error;
};

struct DominantStrategyError : Error {
    using Error::Error;
};

struct NonFiniteError : Error {
    using Error::Error;
};

// Choice-map root bracketing exhausted: the regularizer is not steep.
struct SolverFailureError : Error {
    using Error::Error;
};

struct BoundaryError : Error {
    using Error::Error;
};

struct EigenFailureError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct InvalidConfigError : Error {
    using Error::Error;
};

} // namespace forel
