#pragma once

#include <stdexcept>
#include <string>

namespace braidalex {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRange : std::runtime_error {
    explicit IndexOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct DivisorZero : std::runtime_error {
    explicit DivisorZero(const std::string& what) : std::runtime_error(what) {}
};

struct NotDivisible : std::runtime_error {
    explicit NotDivisible(const std::string& what) : std::runtime_error(what) {}
};

struct NotSquare : std::runtime_error {
    explicit NotSquare(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a Torres quotient that must be exact leaves a remainder.
// This always indicates an internal bug, never bad user input.
struct DivisibilityFailure : std::runtime_error {
    explicit DivisibilityFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace braidalex
