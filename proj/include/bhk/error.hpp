#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bhk {

enum class ErrorCode {
  // Delsarte matrix validation
  NegativeEntry,
  RowWithoutZero,
  SingularMatrix,
  CharDividesDet,
  NonpositiveWeight,
  InvalidCharacteristic,
  NotCalabiYau,
  // number theory preconditions
  InvalidArgument,
  NotCoprime,
  // groups and pairs
  ModulusMismatch,
  GroupTooLarge,
  GroupNotBetweenJAndSL,
  NotInKernel,
  NotInvertiblePotential,
  PairNotAdequate,
  MirrorNotAdequate,
  // ages and Picard sets
  ZeroCoordinate,
  NonintegralAge,
  HNotInMd,
  CharDividesD,
  // front end
  ParseError,
  SemanticError,
  // bugs, never user error
  MethodMismatch,
  InternalError,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// True for codes that indicate an implementation defect rather than bad input.
constexpr bool is_internal(ErrorCode code) noexcept {
  return code == ErrorCode::MethodMismatch || code == ErrorCode::InternalError;
}

class BhkError : public std::runtime_error {
 public:
  BhkError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw BhkError(code, message);
}

/// Internal consistency check; a failure here is a bug.
inline void ensure(bool condition, const std::string& what) {
  if (!condition) fail(ErrorCode::InternalError, "internal check failed: " + what);
}

}  // namespace bhk
