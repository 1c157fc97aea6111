#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "algproof/polynomial.hpp"

namespace algproof {

// Which algebraic proof system a certificate is checked against.
enum class SystemKind {
  PcQ,         // PC over Q: no square roots, no extensions, final line exactly 1
  PcSqrtQ,     // PC with square roots over Q
  PcSqrtZ,     // PC with square roots over Z
  ExtPcSqrtQ,  // extended PC with square roots over Q
  ExtPcSqrtZ,  // extended PC with square roots over Z
  SpsPcQ,      // sum-product-sum PC over Q: affine extensions, no square roots
};

std::string_view system_name(SystemKind kind);
std::optional<SystemKind> parse_system(std::string_view name);

bool is_integral_system(SystemKind kind);
bool allows_sqrt(SystemKind kind);
bool allows_extensions(SystemKind kind);

namespace rule {

// Index into the combined axiom list: base axioms first, then extensions.
struct Axiom {
  std::size_t index = 0;
  friend bool operator==(const Axiom&, const Axiom&) = default;
};

struct LinComb {
  std::size_t j = 0;
  std::size_t k = 0;
  Scalar alpha;
  Scalar beta;
  friend bool operator==(const LinComb& a, const LinComb& b) {
    return a.j == b.j && a.k == b.k && a.alpha == b.alpha && a.beta == b.beta;
  }
};

struct MulVar {
  std::size_t k = 0;
  VarId var;
  friend bool operator==(const MulVar&, const MulVar&) = default;
};

// The line carries the claimed root; checking squares it.
struct Sqrt {
  std::size_t k = 0;
  friend bool operator==(const Sqrt&, const Sqrt&) = default;
};

}  // namespace rule

using StepRule = std::variant<rule::Axiom, rule::LinComb, rule::MulVar, rule::Sqrt>;

struct ProofLine {
  Polynomial poly;
  StepRule rule;
  friend bool operator==(const ProofLine&, const ProofLine&) = default;
};

// Defines `var` as `definition`; contributes the axiom var - definition.
struct ExtensionAxiom {
  VarId var;
  Polynomial definition;

  Polynomial axiom() const { return Polynomial::variable(var) - definition; }
  friend bool operator==(const ExtensionAxiom&, const ExtensionAxiom&) = default;
};

struct AxiomSet {
  std::vector<Polynomial> base;
  std::vector<ExtensionAxiom> extensions;

  std::size_t size() const { return base.size() + extensions.size(); }
  Polynomial axiom(std::size_t index) const;
  friend bool operator==(const AxiomSet&, const AxiomSet&) = default;
};

// A complete proof file: system, axioms and derivation.
struct Certificate {
  SystemKind kind = SystemKind::PcSqrtZ;
  AxiomSet axioms;
  std::vector<ProofLine> lines;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

}  // namespace algproof
