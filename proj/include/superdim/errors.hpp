#pragma once

#include <stdexcept>
#include <string>

namespace superdim {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (algebra names, label lists, rationals).
class SyntaxError : public Error {
 public:
  using Error::Error;
};

/// A label list mentions the free parameter more than once.
class MultipleParams : public SyntaxError {
 public:
  using SyntaxError::SyntaxError;
};

/// Well-formed input that violates a mathematical constraint.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Two affine scalars tagged with different free parameters were combined.
class ParamMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Product of two parameter-carrying scalars. Never legal inside the engine.
class QuadraticOverflow : public Error {
 public:
  using Error::Error;
};

/// exact_ratio() on scalars that are not proportional.
class NonProportional : public Error {
 public:
  using Error::Error;
};

/// An even Dynkin label is negative or not an integer.
class NonDominant : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// The hidden label of a type II weight is not a non-negative integer.
class NonIntegralHidden : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A free parameter appears where it is not allowed.
class ParamMisuse : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotTypeII : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class OutOfRange : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace superdim
