#pragma once

#include <stdexcept>
#include <string>

namespace condsup {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vectors, partitions or systems that live on different outcome sets.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// An object violates a structural invariant (weights, partitions,
/// adaptedness, refinement, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An argument outside the domain of an operation (p < 1, negative input
/// where a non-negative one is required, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Malformed textual input. `position` is a human-readable locator such as
/// a JSON path or a character offset.
class ParseError : public Error {
public:
    ParseError(std::string position, const std::string& what)
        : Error(position.empty() ? what : position + ": " + what), position_(std::move(position)) {}

    const std::string& position() const noexcept { return position_; }

private:
    std::string position_;
};

}  // namespace condsup
