#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace workbench {

// Base class for all workbench errors. Subclasses carry structured fields
// where callers are expected to inspect them.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- text / table layer -----------------------------------------------------

struct ParseError : Error {
  int line = 0;    // 1-based source line
  int column = 0;  // 1-based source column
  ParseError(const std::string& msg, int line_, int column_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

struct DuplicateIncidenceError : ParseError {
  using ParseError::ParseError;
};

struct ValidationError : Error {
  using Error::Error;
};

struct NotTriplePointError : ValidationError {
  int point;  // 1-based label
  NotTriplePointError(int point_, int count)
      : ValidationError("point e" + std::to_string(point_) + " lies in " +
                        std::to_string(count) + " columns, expected 3"),
        point(point_) {}
};

struct RepeatedPairError : ValidationError {
  int line_i, line_j;  // 1-based
  RepeatedPairError(int i, int j)
      : ValidationError("lines L" + std::to_string(i) + " and L" +
                        std::to_string(j) + " share more than one point"),
        line_i(i),
        line_j(j) {}
};

struct CensusMismatchError : ValidationError {
  using ValidationError::ValidationError;
};

// --- enumeration -------------------------------------------------------------

struct InfeasibleCensusError : Error {
  using Error::Error;
};

struct CountMismatchError : Error {
  std::vector<std::string> enumerated;  // canonical digests of enumerated tables
  std::vector<std::string> registry;    // names of registry tables
  CountMismatchError(std::string msg, std::vector<std::string> enumerated_,
                     std::vector<std::string> registry_)
      : Error(std::move(msg)),
        enumerated(std::move(enumerated_)),
        registry(std::move(registry_)) {}
};

// --- algebra ------------------------------------------------------------------

struct ZeroPolynomialError : Error {
  using Error::Error;
};

struct DegreeZeroError : Error {
  using Error::Error;
};

struct NotSquarefreeError : Error {
  using Error::Error;
};

struct NotBivariateError : Error {
  using Error::Error;
};

struct DegreeTooHighError : Error {
  using Error::Error;
};

// --- realization / classification ---------------------------------------------

struct NoGridError : Error {
  using Error::Error;
};

struct InconsistentIncidenceError : Error {
  using Error::Error;
};

struct ParameterBudgetExceededError : Error {
  using Error::Error;
};

struct EliminationOverflowError : Error {
  using Error::Error;
};

struct NonInvertibleDenominatorError : Error {
  using Error::Error;
};

}  // namespace workbench
