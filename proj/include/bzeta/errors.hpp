#pragma once

#include <stdexcept>
#include <string>

namespace bzeta {

// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Power series whose constant term has no inverse in the coefficient ring.
class NotAUnit : public Error {
 public:
  using Error::Error;
};

// Reading a series coefficient beyond its known order.
class OutOfOrder : public Error {
 public:
  using Error::Error;
};

class NoSolution : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class DivergentSum : public Error {
 public:
  using Error::Error;
};

class FitFailed : public Error {
 public:
  using Error::Error;
};

// A consistency assertion failed; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace bzeta
