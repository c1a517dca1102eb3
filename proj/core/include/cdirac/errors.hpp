#pragma once

#include <stdexcept>
#include <string>

namespace cdirac {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Evaluation exactly on (or numerically at) a singular point of a potential.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

// Closed-form level formula has no finite value for the requested index.
class SingularLevelError : public Error {
 public:
  using Error::Error;
};

class UndefinedResidualError : public Error {
 public:
  using Error::Error;
};

class BranchAnchorError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class BoundaryConditionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedCaseError : public Error {
 public:
  using Error::Error;
};

class DivisionForbiddenError : public Error {
 public:
  using Error::Error;
};

class UnknownCaseError : public Error {
 public:
  UnknownCaseError(const std::string& name, std::string suggestion);
  const std::string& suggestion() const noexcept { return suggestion_; }

 private:
  std::string suggestion_;
};

class ToleranceSchemaError : public Error {
 public:
  using Error::Error;
};

// True for errors caused by the caller's parameters rather than by the
// numerical machinery.
bool is_configuration_error(const std::exception& e) noexcept;

}  // namespace cdirac
