#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chern3 {

enum class ErrorKind {
  DimensionMismatch,
  AsymmetricForm,
  LatticeMismatch,
  DivisionByZero,
  ParseError,
  NonUnitSeries,
  InvalidPreset,
  NonIntegralRank,
  DegenerateLine,
  RankUnsupported,
  InsufficientLedger,
  NegativeDimension,
  UnsupportedPicardRank,
  MissingCurveLattice,
  EnumerationLimit,
  ClaimViolation,
  EmptyRoots,
  InvalidArgument,
  SchemaError,
  IOError,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All domain failures are reported through this one exception type; the kind
// is what the CLI surfaces and what tests match on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace chern3
