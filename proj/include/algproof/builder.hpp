#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "algproof/proof.hpp"

namespace algproof {

// Append-only construction of a derivation. Every method computes the line
// it appends, so the result is correct by construction; scalars are checked
// against the system's ring (Error "NonIntegerScalar" for Z systems).
class ProofBuilder {
 public:
  ProofBuilder(AxiomSet axioms, SystemKind kind);

  std::size_t axiom(std::size_t index);
  std::size_t lincomb(std::size_t j, std::size_t k, const Scalar& alpha, const Scalar& beta);
  std::size_t scale(std::size_t k, const Scalar& s) { return lincomb(k, k, s, 0); }
  std::size_t mul_var(std::size_t k, VarId v);
  // Appends `root` justified by the square-root rule; root^2 must equal line k.
  std::size_t sqrt(std::size_t k, Polynomial root);

  // Appends deg(mono) variable multiplications followed by one scaling line;
  // the last line is s * mono * line[source].
  std::size_t emit_monomial_multiple(std::size_t source, const Monomial& mono, const Scalar& s);

  // A line equal to sum(c_i * line[i]) built as a balanced tree of linear
  // combinations. A single leaf with coefficient 1 is returned as is.
  std::size_t weighted_sum(std::span<const std::pair<std::size_t, Scalar>> leaves);

  // Appends a line verbatim; used by translators that know the justification.
  std::size_t push(ProofLine line);

  const Polynomial& poly(std::size_t i) const { return lines_.at(i).poly; }
  std::size_t size() const { return lines_.size(); }
  const AxiomSet& axioms() const { return axioms_; }
  SystemKind kind() const { return kind_; }
  const std::vector<ProofLine>& lines() const { return lines_; }

  Certificate finish() &&;

 private:
  void require_ring(const Scalar& s) const;

  AxiomSet axioms_;
  SystemKind kind_;
  std::vector<ProofLine> lines_;
};

// Memoizes mono * line[source] chains built from single-variable
// multiplications, so monomials sharing a prefix share lines.
class MultipleCache {
 public:
  explicit MultipleCache(ProofBuilder& builder) : builder_(builder) {}

  std::size_t multiple(std::size_t source, const Monomial& mono);

 private:
  ProofBuilder& builder_;
  std::map<std::pair<std::size_t, Monomial>, std::size_t> cache_;
};

}  // namespace algproof
