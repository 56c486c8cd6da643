#pragma once

#include <stdexcept>
#include <string>

namespace sparsemul {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text or other unparsable input.
class ParseError : public Error {
public:
  using Error::Error;
};

/// An input violates a mathematical precondition (non-primitive factor,
/// non-coprime exponents, order undefined, ...).
class HypothesisError : public Error {
public:
  using Error::Error;
};

/// A configured size or memory cap would be exceeded.
class CapExceeded : public Error {
public:
  using Error::Error;
};

}  // namespace sparsemul
