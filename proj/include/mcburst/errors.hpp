#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcburst {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Structurally valid input that violates a data invariant
/// (duplicate sequence numbers, empty trace, ...).
class IntegrityError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Chain without a unique stationary distribution, or a state that
/// can never be entered or left.
class DegenerateChainError : public Error {
public:
    using Error::Error;
};

/// Requested (p, pi_b) pair has no valid r in [0, 1].
class InfeasiblePairError : public Error {
public:
    using Error::Error;
};

/// Transition-count estimator has an empty denominator.
class EstimatorUndefinedError : public Error {
public:
    using Error::Error;
};

/// Reliability target above the reachable cumulative probability.
class UnattainableTargetError : public Error {
public:
    using Error::Error;
};

/// Not enough interior runs to form a distribution.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

}  // namespace mcburst
