#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace invar {

enum class ErrorCode {
  // ffield
  NonPrimeCharacteristic,
  ReducibleModulus,
  BadModulus,
  FieldTooLarge,
  DivisionByZero,
  FieldMismatch,
  // mpoly
  RingMismatch,
  IndexOutOfRange,
  LengthMismatch,
  ExponentOverflow,
  ZeroPolynomialDegree,
  ParseError,
  // gbasis
  ZeroGenerator,
  NonHomogeneousInput,
  // gaction
  CapExceeded,
  NotAPGroup,
  DimensionMismatch,
  NotInvertible,
  NotUnipotent,
  // nakajima
  NotTriangular,
  BadSequence,
  // hilbert
  NoCandidate,
  ReductionEscape,
  StructureInvalid,
  VerificationFailed,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace invar
