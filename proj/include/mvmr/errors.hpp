#pragma once

#include <stdexcept>
#include <string>

namespace mvmr {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad user input. The CLI maps this family to exit status 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class ValidationError : public InputError {
 public:
  using InputError::InputError;
};

class InsufficientDataError : public InputError {
 public:
  using InputError::InputError;
};

class NotPsdError : public Error {
 public:
  using Error::Error;
};

class IllConditionedError : public Error {
 public:
  using Error::Error;
};

class DegenerateSpectrumError : public Error {
 public:
  using Error::Error;
};

class DegenerateDenominatorError : public Error {
 public:
  using Error::Error;
};

class TuningFailedError : public Error {
 public:
  using Error::Error;
};

}  // namespace mvmr
