#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "algproof/diagnostics.hpp"
#include "algproof/proof.hpp"

namespace algproof::reslin {

// a_1 x_1 + ... + a_n x_n = a_0 over the integers. Zero coefficients are not
// stored, so the empty map with constant c encodes 0 = c.
struct LinEq {
  std::map<VarId, Integer> coeffs;
  Integer constant;

  bool is_constant_equation() const { return coeffs.empty(); }
  std::string to_string() const;

  friend bool operator==(const LinEq& a, const LinEq& b) {
    return a.constant == b.constant && a.coeffs == b.coeffs;
  }
  friend bool operator<(const LinEq& a, const LinEq& b);
};

// Builds a LinEq, dropping zero coefficients.
LinEq make_eq(std::map<VarId, Integer> coeffs, Integer constant);
// alpha * a + beta * b, coefficientwise including the constant.
LinEq combine(const LinEq& a, const LinEq& b, const Integer& alpha, const Integer& beta);

// Ordered for addressing; compared as a multiset.
using Disjunction = std::vector<LinEq>;

bool same_multiset(const Disjunction& a, const Disjunction& b);
std::string to_string(const Disjunction& d);

namespace rule {

struct Axiom {
  std::size_t index = 0;
};
struct BooleanAxiom {
  VarId var;
};
// From line j = A or L1 (L1 at position dj) and line k = B or L2 (L2 at dk)
// derive A or B or (alpha L1 + beta L2).
struct Resolution {
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t dj = 0;
  std::size_t dk = 0;
  Scalar alpha;
  Scalar beta;
};
struct Weakening {
  std::size_t j = 0;
  LinEq eq;
};
// Drops the constant equation at position d (0 = a_0 with a_0 != 0).
struct Simplification {
  std::size_t j = 0;
  std::size_t d = 0;
};
// Drops position d2, which must equal position d1.
struct Contraction {
  std::size_t j = 0;
  std::size_t d1 = 0;
  std::size_t d2 = 0;
};

}  // namespace rule

using RlRule = std::variant<rule::Axiom, rule::BooleanAxiom, rule::Resolution, rule::Weakening,
                            rule::Simplification, rule::Contraction>;

struct RlLine {
  Disjunction disjunction;
  RlRule rule;
};

struct RlProof {
  std::vector<RlLine> lines;

  bool is_refutation() const { return !lines.empty() && lines.back().disjunction.empty(); }
};

// A Res-Lin file: initial disjunctions K and a proof from them.
struct ReslinFile {
  std::vector<Disjunction> axioms;
  RlProof proof;
};

struct RlReport {
  bool valid = false;
  std::optional<CheckError> error;
  bool refutation = false;
  Integer size_unary;
  std::uint64_t size_binary = 0;
  std::size_t line_count = 0;
};

// The disjunction `rule` yields from the given earlier lines, or the error
// that prevents applying it. `lines` must hold exactly the earlier lines.
struct Conclusion {
  std::optional<Disjunction> result;
  std::optional<CheckError> error;
};
Conclusion apply_rule(std::span<const Disjunction> K, std::span<const RlLine> lines,
                      const RlRule& rule);

RlReport check_reslin(std::span<const Disjunction> K, const RlProof& proof);

// Sum of |a_i| / ceil(log2 |a_i|) over variable coefficients of every
// disjunct; constants a_0 are not counted.
Integer size_unary(const Disjunction& d);
std::uint64_t size_binary(const Disjunction& d);
Integer size_unary(const RlProof& proof);
std::uint64_t size_binary(const RlProof& proof);

// Appends lines whose conclusions are computed from the rule; throws
// Error("InvalidInputProof") when the rule does not apply.
class RlBuilder {
 public:
  explicit RlBuilder(std::vector<Disjunction> axioms) : axioms_(std::move(axioms)) {}

  std::size_t add(RlRule rule);
  const Disjunction& line(std::size_t i) const { return proof_.lines.at(i).disjunction; }
  std::size_t size() const { return proof_.lines.size(); }
  ReslinFile finish() &&;

 private:
  std::vector<Disjunction> axioms_;
  RlProof proof_;
};

// ------------------------------------------------------------ hat translation

// The affine form a.x - a_0 of an equation, kept exactly (no sign or gcd
// normalization), so 2x = 2 and x = 1 are different forms.
struct AffineKey {
  std::map<VarId, Integer> coeffs;
  Integer constant;  // equals -a_0

  friend bool operator==(const AffineKey& a, const AffineKey& b) {
    return a.constant == b.constant && a.coeffs == b.coeffs;
  }
  friend bool operator<(const AffineKey& a, const AffineKey& b);
};

AffineKey canonical_form(const LinEq& eq);
Polynomial affine_polynomial(const AffineKey& key);

// One y-variable per distinct affine form, numbered from y1 in order of first
// appearance.
class Registry {
 public:
  VarId intern(const AffineKey& key);
  std::optional<VarId> find(const AffineKey& key) const;
  // Y-variable of each disjunct in order; throws Error("UnregisteredForm").
  std::vector<VarId> variables_of(const Disjunction& d) const;
  const AffineKey& form_of(VarId y) const;
  std::size_t size() const { return order_.size(); }
  // y_i = affine form i, in index order.
  std::vector<ExtensionAxiom> definitions() const;

 private:
  std::map<AffineKey, VarId> index_;
  std::vector<AffineKey> order_;
};

Registry build_registry(std::span<const Disjunction> K, const RlProof& proof);

struct HatSystem {
  Polynomial product_equation;  // product of the disjuncts' variables; 1 if D is empty
  std::vector<ExtensionAxiom> definitions;
};

HatSystem hat(const Disjunction& d, const Registry& registry);
// The product y_{i1} ... y_{it} of a disjunction's registry variables.
Monomial hat_monomial(const Disjunction& d, const Registry& registry);

}  // namespace algproof::reslin
