#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace itlog {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// invert_unit() was given something other than a single nonzero monomial.
class NotAUnit : public Error {
 public:
  using Error::Error;
};

/// Binary series operation on operands truncated at different orders.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

/// log(1+X) or e^X requested for a series with nonzero constant term.
class NotWellDefined : public Error {
 public:
  using Error::Error;
};

/// Formal polynomial form evaluated outside the positive integers.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// The requested object is not representable as a formal polynomial form.
class NotAPolynomialForm : public Error {
 public:
  using Error::Error;
};

/// Floating-point evaluation left the domain of an iterated log/exp.
class NumericDomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace itlog
