#include "rcb/error.hpp"

namespace rcb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::VarsetMismatch: return "VarsetMismatch";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::UnboundVariable: return "UnboundVariable";
    case ErrorKind::MissingValue: return "MissingValue";
    case ErrorKind::NonTerminating: return "NonTerminating";
    case ErrorKind::BottomPole: return "BottomPole";
    case ErrorKind::Inadmissible: return "Inadmissible";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::UnboundSlot: return "UnboundSlot";
    case ErrorKind::NonPolynomialResult: return "NonPolynomialResult";
    case ErrorKind::InadmissibleLocalWeights: return "InadmissibleLocalWeights";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::TruncationMismatch: return "TruncationMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error(ErrorKind::Parse, message + " at position " + std::to_string(position)),
      position_(position) {}

}  // namespace rcb
