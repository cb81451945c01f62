#pragma once

#include <stdexcept>
#include <string>

namespace pbraid {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed word text or move specification.
class ParseError : public Error {
public:
  using Error::Error;
};

/// Two operands live in monoids with different strand counts.
class StrandMismatch : public Error {
public:
  using Error::Error;
};

/// An operation that needs a classical braid word received a pre-crossing.
class PreCrossingError : public Error {
public:
  using Error::Error;
};

/// An exponential expansion would exceed its configured term budget.
class CapExceeded : public Error {
public:
  using Error::Error;
};

/// A Markov move whose preconditions do not hold for the target word.
class InvalidMove : public Error {
public:
  using Error::Error;
};

} // namespace pbraid
