#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "algproof/checker.hpp"
#include "algproof/proof.hpp"
#include "algproof/reslin.hpp"

namespace algproof::xlate {

// ------------------------------------------------------- Res-Lin -> Ext-PC√_Q

struct SimulationOutput {
  // Base: hat products of K, then x^2 - x for every variable used by a
  // boolean axiom. Extensions: the registry definitions.
  Certificate cert;
  // Res-Lin line i -> PC line holding the hat product of D_i.
  std::vector<std::size_t> line_map;
  reslin::Registry registry;
};

// Throws Error("InvalidInputProof") if pi is not a valid Res-Lin proof from K,
// and Error("InternalCheckFailure") if the output fails its own check.
SimulationOutput simulate_reslin_b(std::span<const reslin::Disjunction> K,
                                   const reslin::RlProof& pi);

// Sum over output lines of literal_size plus term count, plus the line count.
std::uint64_t simulation_size(const Certificate& cert);
// size_binary(pi) + |pi| + |registry|.
std::uint64_t simulation_input_measure(const reslin::RlProof& pi, const reslin::Registry& registry);

// ---------------------------------------------------------- Ext-PC√_Q -> Z

struct TValues {
  std::vector<Integer> M;                   // denominator product of Q_i
  std::vector<Integer> T;                   // T_i = M_i * prod_{j<i} T_j^alpha_ij
  std::vector<std::vector<std::uint32_t>> alpha;  // alpha[i][j], j < i
};

TValues compute_T(const AxiomSet& axioms);

// T_i * Q_i(x, y_1/T_1, ..., y_{i-1}/T_{i-1}) for extension i; needs T_0..T_i.
Polynomial primed_definition(const AxiomSet& axioms, std::size_t i, const TValues& t);
// y_i -> T_i y_i (or y_i / T_i) for the first t.T.size() extensions.
Bindings y_scaling(const AxiomSet& axioms, const TValues& t, bool inverse);
// Gamma'': the base axioms with every definition replaced by its primed form.
AxiomSet primed_axioms(const AxiomSet& axioms, const TValues& t);

struct PhaseOneLine {
  ProofLine line;
  std::size_t provenance = 0;       // original line j
  std::optional<VarId> scaled_by;   // R'(x, T y) = T_k R_j when set, else = R_j
};

struct PhaseOneError {
  std::size_t line = 0;
  std::string code;  // SubstitutionIdentityFailure | ScalarDisciplineFailure
  std::string message;
};

std::optional<PhaseOneError> verify_phase_one(const AxiomSet& axioms,
                                              std::span<const ProofLine> original,
                                              std::span<const PhaseOneLine> primed,
                                              const TValues& t);

struct RationalizeOptions {
  // Use M' = L_k * prod T_j^alpha_j in Case 4 instead of the least common
  // denominator, so F factors exactly over M, deltas and L.
  bool faithful_constants = false;
};

struct RationalizeState {
  std::vector<Integer> M;
  std::vector<Integer> T;
  std::vector<std::vector<std::uint32_t>> alpha;
  std::vector<Integer> deltas;  // distinct LinComb scalar denominators, ascending
  std::vector<Integer> L;       // denominator product of each original line
  Integer F;                    // final scaling constant
  Integer final_constant;       // F * M
  Scalar input_final;
  // Exponents of F over (M..., deltas..., L...); faithful mode only.
  std::optional<std::vector<std::uint64_t>> F_exponents;
};

struct RationalizeOutput {
  Certificate cert;  // Ext-PC√_Z over Gamma''
  std::vector<PhaseOneLine> phase_one;
  RationalizeState state;
};

// Throws Error("NonIntegerBaseAxiom"), Error("InvalidInputProof") or
// Error("InternalCheckFailure").
RationalizeOutput rationalize(const AxiomSet& axioms, std::span<const ProofLine> proof,
                              const RationalizeOptions& options = {});

}  // namespace algproof::xlate
