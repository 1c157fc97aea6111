#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "algproof/diagnostics.hpp"
#include "algproof/proof.hpp"

namespace algproof {

struct Measures {
  std::uint64_t total_size = 0;  // sum of literal_size over all lines
  int degree = -1;               // max line degree; -1 when every line is zero
  std::size_t line_count = 0;

  friend bool operator==(const Measures&, const Measures&) = default;
};

struct CheckReport {
  bool valid = false;
  std::optional<CheckError> error;
  std::optional<Scalar> final_constant;
  std::uint64_t total_size = 0;
  int degree = -1;
  std::size_t line_count = 0;
  // Populated only in all-errors mode; never affects `valid` or `error`.
  std::vector<CheckError> all_errors;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct CheckOptions {
  // Keep checking after the first bad line and list every failure.
  bool all_errors = false;
  // Require the last line to be a nonzero constant (exactly 1 for pc-q).
  bool require_refutation = true;
};

Measures measure(std::span<const ProofLine> proof);

std::optional<CheckError> validate_axiom_set(const AxiomSet& axioms, SystemKind kind);

// Verdict for `line` placed right after `prefix`; reported line index is
// prefix.size(). Earlier lines are taken as given.
std::optional<CheckError> check_step(std::span<const ProofLine> prefix, const ProofLine& line,
                                     const AxiomSet& axioms, SystemKind kind);

CheckReport check_refutation(const AxiomSet& axioms, std::span<const ProofLine> proof,
                             SystemKind kind, const CheckOptions& options = {});

inline CheckReport check_certificate(const Certificate& cert, const CheckOptions& options = {}) {
  return check_refutation(cert.axioms, cert.lines, cert.kind, options);
}

}  // namespace algproof
