#pragma once

#include <stdexcept>
#include <string>

namespace sonckit {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class NotHomogeneous : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class ZeroFormInput : public Error {
 public:
  ZeroFormInput() : Error("operation requires a nonzero form") {}
};

class OddDegree : public Error {
 public:
  using Error::Error;
};

class AffinelyDependentInput : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class MonomialSquareSumHasNoCircuitNumber : public Error {
 public:
  MonomialSquareSumHasNoCircuitNumber()
      : Error("a sum of monomial squares has no inner term and no circuit number") {}
};

class NotNonnegativeCircuit : public Error {
 public:
  using Error::Error;
};

class PreconditionNotEquality : public Error {
 public:
  using Error::Error;
};

class UncoveredInnerExponent : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class OddPointInDelta : public Error {
 public:
  using Error::Error;
};

class ZeroCoordinate : public Error {
 public:
  using Error::Error;
};

/// Internal consistency failure; the CLI maps it to exit code 2.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace sonckit
