#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace platek {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Surface-syntax error with source position and the tokens that would
/// have been accepted.
struct ParseError : Error {
  ParseError(std::string msg, int line, int column, std::string expected)
      : Error("parse error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": " + msg +
              (expected.empty() ? "" : " (expected " + expected + ")")),
        line(line),
        column(column),
        expected(std::move(expected)) {}
  int line;
  int column;
  std::string expected;
};

struct TypeError : Error {
  using Error::Error;
};

struct UnboundVariable : TypeError {
  explicit UnboundVariable(const std::string& name)
      : TypeError("unbound variable: " + name), name(name) {}
  std::string name;
};

struct UnknownOracle : TypeError {
  explicit UnknownOracle(const std::string& name)
      : TypeError("unknown oracle: #" + name), name(name) {}
  std::string name;
};

struct TypeMismatch : TypeError {
  TypeMismatch(std::string expected, std::string found, std::string location)
      : TypeError("type mismatch: expected " + expected + ", found " + found +
                  (location.empty() ? "" : " in " + location)),
        expected(std::move(expected)),
        found(std::move(found)),
        location(std::move(location)) {}
  std::string expected;
  std::string found;
  std::string location;
};

/// Raised when a domain-space enumeration would exceed the configured
/// element budget.  `estimate` is a (possibly crude) upper bound on the
/// space size; `budget` is the configured cap.
struct BudgetExceeded : Error {
  BudgetExceeded(std::string space, double estimate, std::uint64_t budget)
      : Error("enumeration budget exceeded for " + space + ": estimated " +
              std::to_string(estimate) + " elements, budget " +
              std::to_string(budget)),
        space(std::move(space)),
        estimate(estimate),
        budget(budget) {}
  std::string space;
  double estimate;
  std::uint64_t budget;
};

struct EmptySetError : Error {
  using Error::Error;
};

struct NestingViolated : Error {
  using Error::Error;
};

/// Violation of a documented precondition of a reduction or operator.
struct PreconditionError : Error {
  using Error::Error;
};

/// Internal consistency failure of the finite model itself; seeing this
/// means the model construction is buggy, not the caller.
struct ModelBug : Error {
  using Error::Error;
};

}  // namespace platek
