#pragma once

#include <stdexcept>
#include <string>

namespace modbound {

// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// API misuse: mixed rounding directions, missing hypotheses, bad flags.
class UsageError : public Error {
 public:
  using Error::Error;
};

// Polynomial or field data that cannot describe a number field.
class InvalidFieldError : public Error {
 public:
  using Error::Error;
};

// Prime decomposition that cannot be certified from the given data.
class SplittingError : public Error {
 public:
  using Error::Error;
};

}  // namespace modbound
