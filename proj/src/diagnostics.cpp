#include "algproof/diagnostics.hpp"

#include <array>
#include <utility>

namespace algproof {

namespace {

constexpr std::array<std::pair<ErrorCode, std::string_view>, 17> kCodeNames{{
    {ErrorCode::BadIndex, "BadIndex"},
    {ErrorCode::BadPosition, "BadPosition"},
    {ErrorCode::RuleMismatch, "RuleMismatch"},
    {ErrorCode::SqrtMismatch, "SqrtMismatch"},
    {ErrorCode::SqrtForbidden, "SqrtForbidden"},
    {ErrorCode::NonIntegerScalar, "NonIntegerScalar"},
    {ErrorCode::NonIntegerCoefficient, "NonIntegerCoefficient"},
    {ErrorCode::ExtensionOrderViolation, "ExtensionOrderViolation"},
    {ErrorCode::ExtensionNotAffine, "ExtensionNotAffine"},
    {ErrorCode::ExtensionForbidden, "ExtensionForbidden"},
    {ErrorCode::AxiomNotInSet, "AxiomNotInSet"},
    {ErrorCode::FinalNotConstant, "FinalNotConstant"},
    {ErrorCode::FinalZero, "FinalZero"},
    {ErrorCode::FinalNotOne, "FinalNotOne"},
    {ErrorCode::EmptyProof, "EmptyProof"},
    {ErrorCode::SimplificationOnZero, "SimplificationOnZero"},
    {ErrorCode::ContractionUnequal, "ContractionUnequal"},
}};

}  // namespace

std::string_view code_name(ErrorCode code) {
  for (const auto& [c, name] : kCodeNames)
    if (c == code) return name;
  return "Unknown";
}

std::optional<ErrorCode> parse_code(std::string_view name) {
  for (const auto& [c, n] : kCodeNames)
    if (n == name) return c;
  return std::nullopt;
}

}  // namespace algproof
