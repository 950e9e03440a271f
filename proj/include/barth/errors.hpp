#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace barth {

/// Base of every error raised by the library. CLI exit codes are keyed on
/// the concrete subclass: InputError -> 1, anything else -> 2.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: bad syntax, bad shape of a literal.
class InputError : public Error {
public:
  using Error::Error;
};

class ParseError : public InputError {
public:
  ParseError(const std::string& message, std::size_t position)
      : InputError(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

class ShapeError : public InputError {
public:
  using InputError::InputError;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class NonUnitError : public Error {
public:
  using Error::Error;
};

class IndexError : public Error {
public:
  using Error::Error;
};

/// A numeric argument outside the domain of the operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// The inputs violate a hypothesis of the computation (e.g. the zero locus
/// would have positive expected dimension where a count is requested).
class HypothesisError : public Error {
public:
  using Error::Error;
};

} // namespace barth
