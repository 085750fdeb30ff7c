#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace totp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed machine expression or problem file. Carries a 1-based
/// line/column when the source position is known (0 otherwise).
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line ? std::to_string(line) + ":" + std::to_string(column) + ": " + what : what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Tree evaluation failure: a path longer than the machine's depth bound,
/// a node wider than its fan-out bound, or an ill-formed node.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

class NormalizationError : public EvaluationError {
 public:
  using EvaluationError::EvaluationError;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Brute-force enumeration would exceed the configured caps.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A self-reduction produced a tree whose leaf count disagrees with the
/// brute-force oracle.
class AuditError : public Error {
 public:
  using Error::Error;
};

class KindMismatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace totp
