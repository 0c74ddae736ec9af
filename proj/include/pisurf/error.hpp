#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pisurf {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters handed to a constructor (angles, signs, intervals...).
class ConstructionError : public Error {
public:
  using Error::Error;
};

/// An angle operation received vectors of the wrong causal character.
class ArgumentCausalMismatch : public Error {
public:
  using Error::Error;
};

/// Two space-like vectors whose span is not time-like (|<p,q>| < |p||q|).
class SpanNotTimelike : public Error {
public:
  using Error::Error;
};

/// Two time-like vectors violating the reverse Cauchy-Schwarz inequality.
class ReverseTriangleViolation : public Error {
public:
  using Error::Error;
};

/// Evaluation outside the natural domain of an expression or a curve.
class DomainError : public Error {
public:
  using Error::Error;
};

class SyntaxError : public Error {
public:
  SyntaxError(const std::string& message, std::size_t offset,
              std::vector<std::string> expected)
      : Error(message), offset_(offset), expected_(std::move(expected)) {}

  /// Byte offset into the source text.
  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

class UnknownFunction : public Error {
public:
  UnknownFunction(const std::string& name, std::size_t offset)
      : Error("unknown function '" + name + "' at offset " + std::to_string(offset)),
        name_(name), offset_(offset) {}

  const std::string& name() const noexcept { return name_; }
  std::size_t offset() const noexcept { return offset_; }

private:
  std::string name_;
  std::size_t offset_;
};

/// The geodesic integrator came within 1e-9 of the rotation axis u = 0.
class AxisCrossing : public Error {
public:
  using Error::Error;
};

/// The integrator's conserved quantity drifted beyond its relative budget.
class StepTooLarge : public Error {
public:
  using Error::Error;
};

}  // namespace pisurf
