#include "bhk/error.hpp"

namespace bhk {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::RowWithoutZero: return "RowWithoutZero";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::CharDividesDet: return "CharDividesDet";
    case ErrorCode::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorCode::InvalidCharacteristic: return "InvalidCharacteristic";
    case ErrorCode::NotCalabiYau: return "NotCalabiYau";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::ModulusMismatch: return "ModulusMismatch";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::GroupNotBetweenJAndSL: return "GroupNotBetweenJAndSL";
    case ErrorCode::NotInKernel: return "NotInKernel";
    case ErrorCode::NotInvertiblePotential: return "NotInvertiblePotential";
    case ErrorCode::PairNotAdequate: return "PairNotAdequate";
    case ErrorCode::MirrorNotAdequate: return "MirrorNotAdequate";
    case ErrorCode::ZeroCoordinate: return "ZeroCoordinate";
    case ErrorCode::NonintegralAge: return "NonintegralAge";
    case ErrorCode::HNotInMd: return "HNotInMd";
    case ErrorCode::CharDividesD: return "CharDividesD";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SemanticError: return "SemanticError";
    case ErrorCode::MethodMismatch: return "MethodMismatch";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

}  // namespace bhk
