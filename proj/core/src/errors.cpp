#include "invar/errors.hpp"

namespace invar {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::ZeroPolynomialDegree: return "ZeroPolynomialDegree";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ZeroGenerator: return "ZeroGenerator";
    case ErrorCode::NonHomogeneousInput: return "NonHomogeneousInput";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotAPGroup: return "NotAPGroup";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotUnipotent: return "NotUnipotent";
    case ErrorCode::NotTriangular: return "NotTriangular";
    case ErrorCode::BadSequence: return "BadSequence";
    case ErrorCode::NoCandidate: return "NoCandidate";
    case ErrorCode::ReductionEscape: return "ReductionEscape";
    case ErrorCode::StructureInvalid: return "StructureInvalid";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace invar
