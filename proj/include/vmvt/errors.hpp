#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace vmvt {

enum class ErrorKind {
  invalid_params,
  budget_exceeded,
  bound_violation,  // a mathematical assertion failed; a finding, not a crash
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidParams : public Error {
 public:
  explicit InvalidParams(const std::string& what) : Error(ErrorKind::invalid_params, what) {}
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, double estimate)
      : Error(ErrorKind::budget_exceeded, what + " (estimated " + std::to_string(estimate) + ")"),
        estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

class BoundViolation : public Error {
 public:
  explicit BoundViolation(const std::string& what) : Error(ErrorKind::bound_violation, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(ErrorKind::internal, what) {}
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParams(what);
}

}  // namespace vmvt
