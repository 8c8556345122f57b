#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zrl {

// Base of every error raised by the library. The CLI maps ParseError to exit
// code 2 and every other Error to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// Raised when adaptive quadrature runs out of depth. The best available
/// estimate is kept so callers can decide whether it is good enough.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, std::complex<double> best_estimate)
      : Error(what), best_estimate_(best_estimate) {}
  std::complex<double> best_estimate() const noexcept { return best_estimate_; }

 private:
  std::complex<double> best_estimate_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class OrderError : public Error {
 public:
  using Error::Error;
};

class MissedZeroError : public Error {
 public:
  MissedZeroError(const std::string& what, double lo, double hi)
      : Error(what), lo_(lo), hi_(hi) {}
  std::pair<double, double> interval() const noexcept { return {lo_, hi_}; }

 private:
  double lo_;
  double hi_;
};

class TruncationError : public Error {
 public:
  using Error::Error;
};

class UnsupportedPrincipalValueError : public Error {
 public:
  using Error::Error;
};

class NotOrdinaryError : public Error {
 public:
  using Error::Error;
};

class PrecisionError : public Error {
 public:
  using Error::Error;
};

class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Modes (m, n) whose divisor |m alpha + n| fell below the requested minimum.
class SmallDivisorError : public Error {
 public:
  SmallDivisorError(const std::string& what, std::vector<std::pair<int, int>> modes)
      : Error(what), modes_(std::move(modes)) {}
  const std::vector<std::pair<int, int>>& modes() const noexcept { return modes_; }

 private:
  std::vector<std::pair<int, int>> modes_;
};

}  // namespace zrl
