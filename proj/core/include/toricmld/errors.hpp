#pragma once

#include <stdexcept>

namespace toricmld {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected input: violated precondition, malformed value, bad file.
/// The CLI maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class ZeroVectorError : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatchError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidWeightError : public InputError {
 public:
  using InputError::InputError;
};

class NonpositiveEpsilonError : public InputError {
 public:
  using InputError::InputError;
};

class IndexOutOfRangeError : public InputError {
 public:
  using InputError::InputError;
};

/// Point outside the support of the fan under consideration.
class OutsideSupportError : public InputError {
 public:
  using InputError::InputError;
};

class BoundTooSmallError : public InputError {
 public:
  using InputError::InputError;
};

class InvalidBoundError : public InputError {
 public:
  using InputError::InputError;
};

class CorruptCheckpointError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// A derived fact failed its runtime verification. Signals a bug, never
/// bad input.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace toricmld
