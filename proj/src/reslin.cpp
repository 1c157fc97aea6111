#include "algproof/reslin.hpp"

#include <algorithm>
#include <string>

#include "algproof/error.hpp"

namespace algproof::reslin {

namespace {

CheckError fail(std::size_t line, ErrorCode code, std::string message) {
  return CheckError{line, code, std::move(message)};
}

Disjunction without(const Disjunction& d, std::size_t pos) {
  Disjunction out;
  out.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    if (i != pos) out.push_back(d[i]);
  return out;
}

std::string pos_msg(std::size_t pos, std::size_t line, std::size_t size) {
  return "position " + std::to_string(pos) + " out of range for line " + std::to_string(line) +
         " (" + std::to_string(size) + " disjuncts)";
}

}  // namespace

bool operator<(const LinEq& a, const LinEq& b) {
  if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
  return a.constant < b.constant;
}

bool operator<(const AffineKey& a, const AffineKey& b) {
  if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
  return a.constant < b.constant;
}

std::string LinEq::to_string() const {
  std::string s;
  for (const auto& [v, a] : coeffs) {
    if (!s.empty()) s += sgn(a) < 0 ? " - " : " + ";
    else if (sgn(a) < 0) s += "-";
    const Integer mag = abs(a);
    if (mag != 1) s += algproof::to_string(mag) + "*";
    s += v.name();
  }
  if (s.empty()) s = "0";
  return s + " = " + algproof::to_string(constant);
}

LinEq make_eq(std::map<VarId, Integer> coeffs, Integer constant) {
  std::erase_if(coeffs, [](const auto& kv) { return sgn(kv.second) == 0; });
  return LinEq{std::move(coeffs), std::move(constant)};
}

LinEq combine(const LinEq& a, const LinEq& b, const Integer& alpha, const Integer& beta) {
  std::map<VarId, Integer> c;
  for (const auto& [v, x] : a.coeffs) c[v] += alpha * x;
  for (const auto& [v, x] : b.coeffs) c[v] += beta * x;
  return make_eq(std::move(c), alpha * a.constant + beta * b.constant);
}

bool same_multiset(const Disjunction& a, const Disjunction& b) {
  if (a.size() != b.size()) return false;
  Disjunction x = a, y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

std::string to_string(const Disjunction& d) {
  if (d.empty()) return "(empty)";
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += " | ";
    s += "(" + d[i].to_string() + ")";
  }
  return s;
}

Conclusion apply_rule(std::span<const Disjunction> K, std::span<const RlLine> lines,
                      const RlRule& rule) {
  const std::size_t here = lines.size();
  auto err = [&](ErrorCode code, std::string msg) {
    return Conclusion{std::nullopt, fail(here, code, std::move(msg))};
  };
  auto ok = [](Disjunction d) { return Conclusion{std::move(d), std::nullopt}; };
  auto bad_ref = [&](std::size_t ref) -> std::optional<Conclusion> {
    if (ref < here) return std::nullopt;
    return err(ErrorCode::BadIndex,
               "line " + std::to_string(ref) + " is not before line " + std::to_string(here));
  };

  return std::visit(
      [&](const auto& r) -> Conclusion {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, rule::Axiom>) {
          if (r.index >= K.size())
            return err(ErrorCode::BadIndex, "axiom " + std::to_string(r.index) +
                                                " out of range (" + std::to_string(K.size()) +
                                                " axioms)");
          return ok(K[r.index]);
        } else if constexpr (std::is_same_v<R, rule::BooleanAxiom>) {
          if (!r.var.is_x())
            return err(ErrorCode::RuleMismatch, "boolean axiom on non-x variable " + r.var.name());
          return ok({make_eq({{r.var, 1}}, 0), make_eq({{r.var, 1}}, 1)});
        } else if constexpr (std::is_same_v<R, rule::Resolution>) {
          if (auto e = bad_ref(r.j)) return *e;
          if (auto e = bad_ref(r.k)) return *e;
          if (!is_integral(r.alpha) || !is_integral(r.beta))
            return err(ErrorCode::NonIntegerScalar, "scalars " + algproof::to_string(r.alpha) +
                                                        ", " + algproof::to_string(r.beta) +
                                                        " are not integers");
          const Disjunction& a = lines[r.j].disjunction;
          const Disjunction& b = lines[r.k].disjunction;
          if (r.dj >= a.size()) return err(ErrorCode::BadPosition, pos_msg(r.dj, r.j, a.size()));
          if (r.dk >= b.size()) return err(ErrorCode::BadPosition, pos_msg(r.dk, r.k, b.size()));
          Disjunction out = without(a, r.dj);
          for (auto& eq : without(b, r.dk)) out.push_back(std::move(eq));
          out.push_back(combine(a[r.dj], b[r.dk], r.alpha.get_num(), r.beta.get_num()));
          return ok(std::move(out));
        } else if constexpr (std::is_same_v<R, rule::Weakening>) {
          if (auto e = bad_ref(r.j)) return *e;
          if (std::any_of(r.eq.coeffs.begin(), r.eq.coeffs.end(),
                          [](const auto& kv) { return !kv.first.is_x() || sgn(kv.second) == 0; }))
            return err(ErrorCode::RuleMismatch, "weakening equation is malformed");
          Disjunction out = lines[r.j].disjunction;
          out.push_back(r.eq);
          return ok(std::move(out));
        } else if constexpr (std::is_same_v<R, rule::Simplification>) {
          if (auto e = bad_ref(r.j)) return *e;
          const Disjunction& a = lines[r.j].disjunction;
          if (r.d >= a.size()) return err(ErrorCode::BadPosition, pos_msg(r.d, r.j, a.size()));
          if (!a[r.d].is_constant_equation())
            return err(ErrorCode::RuleMismatch,
                       "disjunct " + a[r.d].to_string() + " is not a constant equation");
          if (sgn(a[r.d].constant) == 0)
            return err(ErrorCode::SimplificationOnZero, "disjunct 0 = 0 cannot be simplified");
          return ok(without(a, r.d));
        } else {
          static_assert(std::is_same_v<R, rule::Contraction>);
          if (auto e = bad_ref(r.j)) return *e;
          const Disjunction& a = lines[r.j].disjunction;
          if (r.d1 >= a.size()) return err(ErrorCode::BadPosition, pos_msg(r.d1, r.j, a.size()));
          if (r.d2 >= a.size()) return err(ErrorCode::BadPosition, pos_msg(r.d2, r.j, a.size()));
          if (r.d1 == r.d2)
            return err(ErrorCode::BadPosition, "contraction positions must differ");
          if (!(a[r.d1] == a[r.d2]))
            return err(ErrorCode::ContractionUnequal,
                       a[r.d1].to_string() + " and " + a[r.d2].to_string() + " differ");
          return ok(without(a, r.d2));
        }
      },
      rule);
}

RlReport check_reslin(std::span<const Disjunction> K, const RlProof& proof) {
  RlReport report;
  report.line_count = proof.lines.size();
  report.size_unary = size_unary(proof);
  report.size_binary = size_binary(proof);
  std::span<const RlLine> lines(proof.lines);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    Conclusion c = apply_rule(K, lines.first(i), lines[i].rule);
    if (c.error) {
      report.error = std::move(c.error);
      return report;
    }
    if (!same_multiset(*c.result, lines[i].disjunction)) {
      report.error = fail(i, ErrorCode::RuleMismatch,
                          "rule gives " + to_string(*c.result) + ", line claims " +
                              to_string(lines[i].disjunction));
      return report;
    }
  }
  report.valid = true;
  report.refutation = proof.is_refutation();
  return report;
}

Integer size_unary(const Disjunction& d) {
  Integer s = 0;
  for (const auto& eq : d)
    for (const auto& [v, a] : eq.coeffs) s += abs(a);
  return s;
}

std::uint64_t size_binary(const Disjunction& d) {
  std::uint64_t s = 0;
  for (const auto& eq : d)
    for (const auto& [v, a] : eq.coeffs) s += ceil_log2(a);
  return s;
}

Integer size_unary(const RlProof& proof) {
  Integer s = 0;
  for (const auto& l : proof.lines) s += size_unary(l.disjunction);
  return s;
}

std::uint64_t size_binary(const RlProof& proof) {
  std::uint64_t s = 0;
  for (const auto& l : proof.lines) s += size_binary(l.disjunction);
  return s;
}

std::size_t RlBuilder::add(RlRule rule) {
  Conclusion c = apply_rule(axioms_, proof_.lines, rule);
  if (c.error) throw Error("InvalidInputProof", c.error->message);
  proof_.lines.push_back({std::move(*c.result), std::move(rule)});
  return proof_.lines.size() - 1;
}

ReslinFile RlBuilder::finish() && { return {std::move(axioms_), std::move(proof_)}; }

AffineKey canonical_form(const LinEq& eq) { return {eq.coeffs, -eq.constant}; }

Polynomial affine_polynomial(const AffineKey& key) {
  std::vector<Term> terms;
  for (const auto& [v, a] : key.coeffs) terms.push_back({Monomial::of(v), Scalar(a)});
  terms.push_back({Monomial(), Scalar(key.constant)});
  return Polynomial::from_terms(std::move(terms));
}

VarId Registry::intern(const AffineKey& key) {
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  const VarId y = VarId::y(static_cast<std::uint32_t>(order_.size() + 1));
  index_.emplace(key, y);
  order_.push_back(key);
  return y;
}

std::optional<VarId> Registry::find(const AffineKey& key) const {
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  return std::nullopt;
}

std::vector<VarId> Registry::variables_of(const Disjunction& d) const {
  std::vector<VarId> out;
  out.reserve(d.size());
  for (const auto& eq : d) {
    auto y = find(canonical_form(eq));
    if (!y) throw Error("UnregisteredForm", "affine form of " + eq.to_string() + " is not registered");
    out.push_back(*y);
  }
  return out;
}

const AffineKey& Registry::form_of(VarId y) const {
  if (!y.is_y() || y.index() == 0 || y.index() > order_.size())
    throw Error("UnregisteredForm", y.name() + " is not a registry variable");
  return order_[y.index() - 1];
}

std::vector<ExtensionAxiom> Registry::definitions() const {
  std::vector<ExtensionAxiom> out;
  out.reserve(order_.size());
  for (std::size_t i = 0; i < order_.size(); ++i)
    out.push_back({VarId::y(static_cast<std::uint32_t>(i + 1)), affine_polynomial(order_[i])});
  return out;
}

Registry build_registry(std::span<const Disjunction> K, const RlProof& proof) {
  Registry r;
  for (const auto& d : K)
    for (const auto& eq : d) r.intern(canonical_form(eq));
  for (const auto& l : proof.lines)
    for (const auto& eq : l.disjunction) r.intern(canonical_form(eq));
  return r;
}

Monomial hat_monomial(const Disjunction& d, const Registry& registry) {
  std::vector<Monomial::Factor> f;
  for (VarId y : registry.variables_of(d)) f.emplace_back(y, 1);
  return Monomial(std::move(f));
}

HatSystem hat(const Disjunction& d, const Registry& registry) {
  HatSystem h;
  h.product_equation = Polynomial::monomial(hat_monomial(d, registry));
  std::vector<VarId> ys = registry.variables_of(d);
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  for (VarId y : ys) h.definitions.push_back({y, affine_polynomial(registry.form_of(y))});
  return h;
}

}  // namespace algproof::reslin
