#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riesz {

// Base of every exception thrown by the library. The CLI maps InvalidArgument
// to a usage failure and everything else to a numerical failure.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class OutOfRange : public Error {
 public:
  using Error::Error;
};

// Argument within tolerance of a pole; `pole` is the nearest pole location
// (a non-positive integer for Gamma, 1 for zeta).
class PoleProximity : public Error {
 public:
  PoleProximity(const std::string& what, long pole) : Error(what), pole_(pole) {}
  long pole() const noexcept { return pole_; }

 private:
  long pole_;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class FormatError : public Error {
 public:
  using Error::Error;
};

class RefinementFailure : public Error {
 public:
  using Error::Error;
};

// A zero whose |zeta'(rho)| falls below the simplicity margin.
class SimplicityViolation : public Error {
 public:
  using Error::Error;
};

class InsufficientSignal : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace riesz
