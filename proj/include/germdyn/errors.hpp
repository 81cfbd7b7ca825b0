#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace germdyn {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public Error {
 public:
  using Error::Error;
};

/// A term-count or size guardrail refused to continue.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t completed = 0)
      : Error(what), completed_(completed) {}
  /// Number of stages (iterates, indices, ...) that finished before the refusal.
  std::size_t completed() const noexcept { return completed_; }

 private:
  std::size_t completed_;
};

class GenericityFailure : public Error {
 public:
  using Error::Error;
};

class NotPrimary : public Error {
 public:
  using Error::Error;
};

class NotStabilized : public Error {
 public:
  using Error::Error;
};

class NonIntegralPolarization : public Error {
 public:
  using Error::Error;
};

class NotNegativeDefinite : public Error {
 public:
  using Error::Error;
};

class MalformedChart : public Error {
 public:
  using Error::Error;
};

class NoRecurrenceFound : public Error {
 public:
  using Error::Error;
};

class UndeterminedDifference : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

/// Input text could not be parsed; `position` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace germdyn
