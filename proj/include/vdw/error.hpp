#pragma once

#include <stdexcept>
#include <string>

namespace vdw {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A difference-set descriptor violates its own invariants.
class InvalidSpec : public Error {
public:
    using Error::Error;
};

/// Two colorings (or a coloring and a graph) cover different windows.
class WindowMismatch : public Error {
public:
    using Error::Error;
};

/// A constructor was called outside the hypothesis of the theorem it implements.
class HypothesisViolation : public Error {
public:
    using Error::Error;
};

/// The supplied prefix of S cannot certify the anchor of interval `interval()`.
class InsufficientPrefix : public Error {
public:
    InsufficientPrefix(int interval, const std::string& what)
        : Error(what), interval_(interval) {}
    int interval() const noexcept { return interval_; }

private:
    int interval_;
};

/// The state-space estimate of an exhaustive search exceeds its configured ceiling.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// Malformed input file or JSON document.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace vdw
