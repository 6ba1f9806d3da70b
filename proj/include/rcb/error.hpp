#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rcb {

enum class ErrorKind {
  VarsetMismatch,
  UnknownVariable,
  UnboundVariable,
  MissingValue,
  NonTerminating,
  BottomPole,
  Inadmissible,
  DivisionByZero,
  UnboundSlot,
  NonPolynomialResult,
  InadmissibleLocalWeights,
  Parse,
  TruncationMismatch,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// callers (and tests) can branch on the cause rather than on message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);

  /// Zero-based byte offset into the parsed text.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace rcb
