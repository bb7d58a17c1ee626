#ifndef FROBENIUS_ERRORS_HPP
#define FROBENIUS_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "multi_index.hpp"

namespace frob {

enum class ErrorKind {
  ZeroConstantTerm,
  SyntaxError,
  UnboundParameter,
  DivisionBySeriesWithZeroConstantTerm,
  ComplexCoefficients,
  NoSolution,
  AllSolutions,
  BasePointNotOnConic,
  ResonantPoint,
  MissingPriorCoefficient,
  OrderMismatch,
  ConstraintViolated,
  OutsideDomain,
  MissingParameter,
  UnsupportedIndex,
  SchemaError,
  NonFiniteCoefficient,
};

inline std::string_view kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnboundParameter: return "UnboundParameter";
    case ErrorKind::DivisionBySeriesWithZeroConstantTerm: return "DivisionBySeriesWithZeroConstantTerm";
    case ErrorKind::ComplexCoefficients: return "ComplexCoefficients";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::AllSolutions: return "AllSolutions";
    case ErrorKind::BasePointNotOnConic: return "BasePointNotOnConic";
    case ErrorKind::ResonantPoint: return "ResonantPoint";
    case ErrorKind::MissingPriorCoefficient: return "MissingPriorCoefficient";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::MissingParameter: return "MissingParameter";
    case ErrorKind::UnsupportedIndex: return "UnsupportedIndex";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::NonFiniteCoefficient: return "NonFiniteCoefficient";
  }
  return "Unknown";
}

/// True for refusals that follow from the mathematics of a well-formed input
/// (as opposed to malformed input).
inline bool is_mathematical_refusal(ErrorKind k) {
  switch (k) {
    case ErrorKind::ZeroConstantTerm:
    case ErrorKind::DivisionBySeriesWithZeroConstantTerm:
    case ErrorKind::ComplexCoefficients:
    case ErrorKind::NoSolution:
    case ErrorKind::AllSolutions:
    case ErrorKind::BasePointNotOnConic:
    case ErrorKind::ResonantPoint:
    case ErrorKind::ConstraintViolated:
    case ErrorKind::OutsideDomain:
    case ErrorKind::NonFiniteCoefficient:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<MultiIndex> indices = {})
      : std::runtime_error(std::string(kind_name(kind)) + ": " + message),
        kind_(kind),
        indices_(std::move(indices)) {}

  ErrorKind kind() const noexcept { return kind_; }
  // Lattice indices attached to the failure (resonant shifts, missing priors).
  const std::vector<MultiIndex>& indices() const noexcept { return indices_; }

 private:
  ErrorKind kind_;
  std::vector<MultiIndex> indices_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t offset, int line, int column,
              std::vector<std::string> expected)
      : Error(ErrorKind::SyntaxError,
              message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        offset_(offset),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

}  // namespace frob

#endif  // FROBENIUS_ERRORS_HPP
