#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace algproof {

// Verdict codes shared by the algebraic and the Res-Lin checkers.
enum class ErrorCode {
  BadIndex,
  BadPosition,
  RuleMismatch,
  SqrtMismatch,
  SqrtForbidden,
  NonIntegerScalar,
  NonIntegerCoefficient,
  ExtensionOrderViolation,
  ExtensionNotAffine,
  ExtensionForbidden,
  AxiomNotInSet,
  FinalNotConstant,
  FinalZero,
  FinalNotOne,
  EmptyProof,
  SimplificationOnZero,
  ContractionUnequal,
};

std::string_view code_name(ErrorCode code);
std::optional<ErrorCode> parse_code(std::string_view name);

struct CheckError {
  // Absent for errors in the axiom set itself.
  std::optional<std::size_t> line;
  ErrorCode code = ErrorCode::RuleMismatch;
  std::string message;

  friend bool operator==(const CheckError&, const CheckError&) = default;
};

}  // namespace algproof
