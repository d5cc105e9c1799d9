#pragma once

#include <stdexcept>
#include <string>

namespace berezin {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function (negative x, negative lambda, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Degree, order or size above a documented ceiling.
class UnsupportedSize : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature ran out of its evaluation budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, double partial, double error_estimate)
      : Error(what), partial_(partial), error_estimate_(error_estimate) {}
  double partial() const noexcept { return partial_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double partial_;
  double error_estimate_;
};

/// The convolution kernel does not fit in the periodic box.
class KernelTruncation : public Error {
 public:
  KernelTruncation(const std::string& what, double required_half_width)
      : Error(what), required_(required_half_width) {}
  double required_half_width() const noexcept { return required_; }

 private:
  double required_;
};

/// Malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace berezin
