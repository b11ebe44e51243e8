#pragma once

#include <stdexcept>
#include <string>

namespace ipgap {

/// Root of every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The mathematics rejects the instance (unbounded, infeasible, degenerate).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed input: files, parameters, shapes.
class InputError : public Error {
 public:
  using Error::Error;
};

/// An internal cross-check failed. Reaching one of these is a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

class UnboundedProgram : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnboundedAux : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonTerminatingOrder : public DomainError {
 public:
  using DomainError::DomainError;
};

class NonGenericCost : public DomainError {
 public:
  using DomainError::DomainError;
};

class DegenerateCone : public DomainError {
 public:
  using DomainError::DomainError;
};

class ZeroIdeal : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnitIdeal : public DomainError {
 public:
  using DomainError::DomainError;
};

class InfiniteFiber : public DomainError {
 public:
  using DomainError::DomainError;
};

class EmptyFiber : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A hard size cap or a wall-clock budget ran out.
class BudgetExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

class BadParameter : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, int line, int column)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class WitnessMismatch : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace ipgap
