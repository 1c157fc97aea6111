#include "algproof/checker.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace algproof {

namespace {

std::string brief(const Polynomial& p) {
  std::string s = p.to_string();
  if (s.size() > 160) s = s.substr(0, 157) + "...";
  return s;
}

CheckError fail(std::optional<std::size_t> line, ErrorCode code, std::string message) {
  return CheckError{line, code, std::move(message)};
}

struct StepChecker {
  std::span<const ProofLine> prefix;
  const ProofLine& line;
  const AxiomSet& axioms;
  SystemKind kind;

  std::size_t here() const { return prefix.size(); }

  std::optional<CheckError> bad_ref(std::size_t ref) const {
    if (ref < here()) return std::nullopt;
    return fail(here(), ErrorCode::BadIndex,
                "line " + std::to_string(ref) + " is not before line " + std::to_string(here()));
  }

  std::optional<CheckError> structure(const rule::Axiom& r) const {
    if (r.index >= axioms.size())
      return fail(here(), ErrorCode::BadIndex,
                  "axiom " + std::to_string(r.index) + " out of range (" +
                      std::to_string(axioms.size()) + " axioms)");
    return std::nullopt;
  }

  std::optional<CheckError> structure(const rule::LinComb& r) const {
    if (auto e = bad_ref(r.j)) return e;
    if (auto e = bad_ref(r.k)) return e;
    if (is_integral_system(kind) && (!is_integral(r.alpha) || !is_integral(r.beta)))
      return fail(here(), ErrorCode::NonIntegerScalar,
                  "scalars " + to_string(r.alpha) + ", " + to_string(r.beta) +
                      " are not integers");
    return std::nullopt;
  }

  std::optional<CheckError> structure(const rule::MulVar& r) const { return bad_ref(r.k); }

  std::optional<CheckError> structure(const rule::Sqrt& r) const {
    if (auto e = bad_ref(r.k)) return e;
    if (!allows_sqrt(kind))
      return fail(here(), ErrorCode::SqrtForbidden,
                  "square root rule not available in " + std::string(system_name(kind)));
    return std::nullopt;
  }

  std::optional<CheckError> semantics(const rule::Axiom& r) const {
    const Polynomial expected = axioms.axiom(r.index);
    if (line.poly == expected) return std::nullopt;
    return fail(here(), ErrorCode::AxiomNotInSet,
                "line is " + brief(line.poly) + " but axiom " + std::to_string(r.index) + " is " +
                    brief(expected));
  }

  std::optional<CheckError> semantics(const rule::LinComb& r) const {
    const Polynomial expected = scale(prefix[r.j].poly, r.alpha) + scale(prefix[r.k].poly, r.beta);
    if (line.poly == expected) return std::nullopt;
    return fail(here(), ErrorCode::RuleMismatch,
                "linear combination gives " + brief(expected) + ", line claims " + brief(line.poly));
  }

  std::optional<CheckError> semantics(const rule::MulVar& r) const {
    const Polynomial expected = mul_var(prefix[r.k].poly, r.var);
    if (line.poly == expected) return std::nullopt;
    return fail(here(), ErrorCode::RuleMismatch,
                "multiplication by " + r.var.name() + " gives " + brief(expected) +
                    ", line claims " + brief(line.poly));
  }

  std::optional<CheckError> semantics(const rule::Sqrt& r) const {
    if (line.poly * line.poly == prefix[r.k].poly) return std::nullopt;
    return fail(here(), ErrorCode::SqrtMismatch,
                "square of " + brief(line.poly) + " is not line " + std::to_string(r.k));
  }

  std::optional<CheckError> run() const {
    if (auto e = std::visit([this](const auto& r) { return structure(r); }, line.rule)) return e;
    if (is_integral_system(kind) && !line.poly.is_integral())
      return fail(here(), ErrorCode::NonIntegerCoefficient,
                  "line " + brief(line.poly) + " has a non-integer coefficient");
    return std::visit([this](const auto& r) { return semantics(r); }, line.rule);
  }
};

}  // namespace

Measures measure(std::span<const ProofLine> proof) {
  Measures m;
  m.line_count = proof.size();
  for (const auto& l : proof) {
    m.total_size += literal_size(l.poly);
    m.degree = std::max(m.degree, l.poly.degree());
  }
  return m;
}

std::optional<CheckError> validate_axiom_set(const AxiomSet& axioms, SystemKind kind) {
  if (!allows_extensions(kind) && !axioms.extensions.empty())
    return fail(std::nullopt, ErrorCode::ExtensionForbidden,
                std::string(system_name(kind)) + " does not admit extension axioms");
  if (is_integral_system(kind)) {
    for (std::size_t i = 0; i < axioms.base.size(); ++i)
      if (!axioms.base[i].is_integral())
        return fail(std::nullopt, ErrorCode::NonIntegerCoefficient,
                    "base axiom " + std::to_string(i) + " has a non-integer coefficient");
  }
  std::set<VarId> defined;
  std::optional<VarId> previous;
  for (const auto& ext : axioms.extensions) {
    if (!ext.var.is_y())
      return fail(std::nullopt, ErrorCode::ExtensionOrderViolation,
                  "extension variable " + ext.var.name() + " is not a y-variable");
    if (previous && !(*previous < ext.var))
      return fail(std::nullopt, ErrorCode::ExtensionOrderViolation,
                  "extension " + ext.var.name() + " does not follow " + previous->name());
    for (VarId v : ext.definition.variables()) {
      if (v.is_y() && (!(v < ext.var) || !defined.count(v)))
        return fail(std::nullopt, ErrorCode::ExtensionOrderViolation,
                    "definition of " + ext.var.name() + " refers to " + v.name() +
                        ", which is not an earlier extension variable");
    }
    if (kind == SystemKind::SpsPcQ && ext.definition.degree() > 1)
      return fail(std::nullopt, ErrorCode::ExtensionNotAffine,
                  "definition of " + ext.var.name() + " has degree " +
                      std::to_string(ext.definition.degree()));
    if (is_integral_system(kind) && !ext.definition.is_integral())
      return fail(std::nullopt, ErrorCode::NonIntegerCoefficient,
                  "definition of " + ext.var.name() + " has a non-integer coefficient");
    defined.insert(ext.var);
    previous = ext.var;
  }
  return std::nullopt;
}

std::optional<CheckError> check_step(std::span<const ProofLine> prefix, const ProofLine& line,
                                     const AxiomSet& axioms, SystemKind kind) {
  return StepChecker{prefix, line, axioms, kind}.run();
}

CheckReport check_refutation(const AxiomSet& axioms, std::span<const ProofLine> proof,
                             SystemKind kind, const CheckOptions& options) {
  CheckReport report;
  const Measures m = measure(proof);
  report.total_size = m.total_size;
  report.degree = m.degree;
  report.line_count = m.line_count;

  auto record = [&](CheckError e) {
    if (!report.error) report.error = e;
    if (options.all_errors) report.all_errors.push_back(std::move(e));
  };

  if (proof.empty()) {
    record(fail(std::nullopt, ErrorCode::EmptyProof, "proof has no lines"));
    return report;
  }
  if (auto e = validate_axiom_set(axioms, kind)) {
    record(*e);
    if (!options.all_errors) return report;
  }
  for (std::size_t i = 0; i < proof.size(); ++i) {
    if (auto e = check_step(proof.first(i), proof[i], axioms, kind)) {
      record(*e);
      if (!options.all_errors) return report;
    }
  }
  if (options.require_refutation) {
    const std::size_t last = proof.size() - 1;
    const Polynomial& final_poly = proof.back().poly;
    if (!final_poly.is_constant()) {
      record(fail(last, ErrorCode::FinalNotConstant,
                  "last line " + brief(final_poly) + " is not a constant"));
    } else if (final_poly.is_zero()) {
      record(fail(last, ErrorCode::FinalZero, "last line is the zero polynomial"));
    } else if (kind == SystemKind::PcQ && final_poly.constant_term() != 1) {
      record(fail(last, ErrorCode::FinalNotOne,
                  "last line is " + to_string(final_poly.constant_term()) + ", expected 1"));
    }
  }
  if (report.error) return report;
  report.valid = true;
  if (options.require_refutation) report.final_constant = proof.back().poly.constant_term();
  return report;
}

}  // namespace algproof
