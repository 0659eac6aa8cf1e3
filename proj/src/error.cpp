#include "chern3/error.hpp"

namespace chern3 {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::AsymmetricForm: return "AsymmetricForm";
    case ErrorKind::LatticeMismatch: return "LatticeMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonUnitSeries: return "NonUnitSeries";
    case ErrorKind::InvalidPreset: return "InvalidPreset";
    case ErrorKind::NonIntegralRank: return "NonIntegralRank";
    case ErrorKind::DegenerateLine: return "DegenerateLine";
    case ErrorKind::RankUnsupported: return "RankUnsupported";
    case ErrorKind::InsufficientLedger: return "InsufficientLedger";
    case ErrorKind::NegativeDimension: return "NegativeDimension";
    case ErrorKind::UnsupportedPicardRank: return "UnsupportedPicardRank";
    case ErrorKind::MissingCurveLattice: return "MissingCurveLattice";
    case ErrorKind::EnumerationLimit: return "EnumerationLimit";
    case ErrorKind::ClaimViolation: return "ClaimViolation";
    case ErrorKind::EmptyRoots: return "EmptyRoots";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::IOError: return "IOError";
  }
  return "Unknown";
}

}  // namespace chern3
