#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace circmin {

/// Stable diagnostic codes. The CLI maps every DomainError to its code name,
/// so these strings are part of the tool's interface.
enum class ErrorCode {
  IndexOutOfRange,
  ParameterOutOfRange,
  NonCircularRow,
  DominatingRow,
  ZeroRowOrColumn,
  RowTooSmall,
  EmptyResult,
  NotClosed,
  RepeatedVertex,
  NoRowArc,
  ZeroWinding,
  UnknownArc,
  AmbiguousStep,
  BlockStructureViolation,
  JumpCountViolation,
  Overlap,
  NonUniformParameters,
  JumpSetCollision,
  BadArcPresent,
  NotCirculantMinor,
  VerificationFailed,
  EmptyWindow,
  NotAFixpoint,
  DecompositionMismatch,
  BoundExceeded,
  CapExceeded,
};

std::string_view to_string(ErrorCode code);

/// Violation of a library invariant or precondition. Exit status 1 territory.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed input files or documents. Exit status 2 territory.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message)
      : std::runtime_error(message) {}
};

}  // namespace circmin
