#pragma once

#include <stdexcept>

namespace qgame {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Register/string size out of range or mismatched.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Bad, duplicate, or colliding qubit indices.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Scalar argument outside its domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Matrix fails the unitarity requirement.
class GateError : public Error {
 public:
  using Error::Error;
};

/// Operation applied to a state that violates its entry condition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid input with inconsistent content.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Search target has no solution.
class NoSolutionError : public Error {
 public:
  using Error::Error;
};

/// Randomized search exhausted its retry budget.
class SearchFailureError : public Error {
 public:
  using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input document with invalid fields.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace qgame
