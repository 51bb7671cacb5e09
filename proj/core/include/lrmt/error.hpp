#pragma once

#include <stdexcept>
#include <string>

namespace lrmt {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed external input (DIMACS, JSON, config files, corrupted codes).
class ParseError : public Error {
public:
    using Error::Error;
};

/// A caller-supplied argument violates an operation's precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// An internal invariant was found broken. Always a bug in this library.
class InternalError : public Error {
public:
    using Error::Error;
};

}  // namespace lrmt
