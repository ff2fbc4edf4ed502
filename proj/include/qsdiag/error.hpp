#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsd {

/// Malformed input: bad shapes, out-of-range indices, unparseable text.
/// The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

/// Syntax error in circuit DSL, matrix JSON or scalar expressions.
/// `line` and `column` are 1-based; zero means "not applicable".
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that violates a physical constraint (normalization,
/// positivity, channel completeness). The CLI maps these to exit code 1.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NormalizationError : public DomainError {
 public:
  using DomainError::DomainError;
};

class IncompleteChannelError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace qsd
