#include "algproof/proof.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace algproof {

namespace {

constexpr std::array<std::pair<SystemKind, std::string_view>, 6> kSystemNames{{
    {SystemKind::PcQ, "pc-q"},
    {SystemKind::PcSqrtQ, "pcsqrt-q"},
    {SystemKind::PcSqrtZ, "pcsqrt-z"},
    {SystemKind::ExtPcSqrtQ, "extpcsqrt-q"},
    {SystemKind::ExtPcSqrtZ, "extpcsqrt-z"},
    {SystemKind::SpsPcQ, "spspc-q"},
}};

}  // namespace

std::string_view system_name(SystemKind kind) {
  for (const auto& [k, name] : kSystemNames)
    if (k == kind) return name;
  return "unknown";
}

std::optional<SystemKind> parse_system(std::string_view name) {
  for (const auto& [k, n] : kSystemNames)
    if (n == name) return k;
  return std::nullopt;
}

bool is_integral_system(SystemKind kind) {
  return kind == SystemKind::PcSqrtZ || kind == SystemKind::ExtPcSqrtZ;
}

bool allows_sqrt(SystemKind kind) {
  return kind != SystemKind::PcQ && kind != SystemKind::SpsPcQ;
}

bool allows_extensions(SystemKind kind) { return kind != SystemKind::PcQ; }

Polynomial AxiomSet::axiom(std::size_t index) const {
  if (index < base.size()) return base[index];
  index -= base.size();
  if (index < extensions.size()) return extensions[index].axiom();
  throw std::out_of_range("axiom index out of range");
}

}  // namespace algproof
