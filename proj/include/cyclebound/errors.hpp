#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclebound {

// Malformed edge-list text. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that violates a domain invariant (self-loop, vertex out of
// range, bad parameter).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or allocation guard refused the requested work.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact integer arithmetic would exceed the supported width.
class CapacityError : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

// An iterative solver stopped before reaching its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Average over an empty edge set.
class UndefinedAverageError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace cyclebound
