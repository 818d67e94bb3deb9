#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace emoflow {

/// Malformed input row. Carries the 1-based line number of the offending row.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Arguments outside the mathematical domain of an operation
/// (non-edge queried, value out of range, undefined metric, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A metric that has no value for the given input (virality of a single
/// node, burst markers of a linear curve, ratio over zero samples).
class UndefinedError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Curve has no awakening/peak pair.
class NoBurstError : public UndefinedError {
 public:
  using UndefinedError::UndefinedError;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace emoflow
