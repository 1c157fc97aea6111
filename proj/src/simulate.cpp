#include <map>
#include <set>

#include "algproof/builder.hpp"
#include "algproof/error.hpp"
#include "algproof/xlate.hpp"

namespace algproof::xlate {

namespace {

using reslin::Disjunction;
namespace rl = reslin::rule;

Monomial without_factor(const Monomial& m, VarId y) { return m.divided(y); }

class Simulator {
 public:
  Simulator(std::span<const Disjunction> K, const reslin::RlProof& pi)
      : K_(K), pi_(pi), registry_(reslin::build_registry(K, pi)), builder_(make_axioms(), kind) {}

  SimulationOutput run() {
    for (std::size_t i = 0; i < pi_.lines.size(); ++i) {
      const std::size_t before = builder_.size();
      const std::size_t at = std::visit([&](const auto& r) { return step(i, r); }, pi_.lines[i].rule);
      if (builder_.size() == before) throw Error("InternalCheckFailure", "line emitted nothing");
      line_map_.push_back(at);
    }
    SimulationOutput out{std::move(builder_).finish(), std::move(line_map_), std::move(registry_)};
    self_check(out);
    return out;
  }

  static constexpr SystemKind kind = SystemKind::ExtPcSqrtQ;

 private:
  AxiomSet make_axioms() {
    AxiomSet ax;
    for (const auto& d : K_) ax.base.push_back(Polynomial::monomial(reslin::hat_monomial(d, registry_)));
    std::set<VarId> booleans;
    for (const auto& l : pi_.lines)
      if (const auto* b = std::get_if<rl::BooleanAxiom>(&l.rule)) booleans.insert(b->var);
    for (VarId v : booleans) {
      boolean_axiom_[v] = ax.base.size();
      const Polynomial x = Polynomial::variable(v);
      ax.base.push_back(x * x - x);
    }
    first_definition_ = ax.base.size();
    ax.extensions = registry_.definitions();
    return ax;
  }

  Monomial hat_of(std::size_t line) const {
    return reslin::hat_monomial(pi_.lines[line].disjunction, registry_);
  }
  VarId var_of(const reslin::LinEq& eq) const { return *registry_.find(reslin::canonical_form(eq)); }
  std::size_t prior(std::size_t line) const { return line_map_.at(line); }

  // Line y - L_y for a registry variable, emitted once.
  std::size_t definition(VarId y) {
    if (auto it = definitions_.find(y); it != definitions_.end()) return it->second;
    const std::size_t at = builder_.axiom(first_definition_ + y.index() - 1);
    definitions_.emplace(y, at);
    return at;
  }

  std::size_t step(std::size_t, const rl::Axiom& r) { return builder_.axiom(r.index); }

  // y_a y_b = y_b (y_a - x) + x (y_b - x + 1) + (x^2 - x).
  std::size_t step(std::size_t i, const rl::BooleanAxiom& r) {
    const auto& d = pi_.lines[i].disjunction;
    const VarId ya = var_of(d[0].constant == 0 ? d[0] : d[1]);
    const VarId yb = var_of(d[0].constant == 0 ? d[1] : d[0]);
    const std::size_t l1 = builder_.mul_var(definition(ya), yb);
    const std::size_t l2 = builder_.mul_var(definition(yb), r.var);
    const std::size_t l3 = builder_.lincomb(l1, l2, 1, 1);
    const std::size_t f = builder_.axiom(boolean_axiom_.at(r.var));
    return builder_.lincomb(l3, f, 1, 1);
  }

  // (a y1 + b y2) m_A m_B, then swap in y3 via y3 - a y1 - b y2, which is a
  // combination of the three definition axioms.
  std::size_t step(std::size_t, const rl::Resolution& r) {
    const auto& dj = pi_.lines[r.j].disjunction;
    const auto& dk = pi_.lines[r.k].disjunction;
    const VarId y1 = var_of(dj[r.dj]);
    const VarId y2 = var_of(dk[r.dk]);
    const VarId y3 = var_of(reslin::combine(dj[r.dj], dk[r.dk], r.alpha.get_num(), r.beta.get_num()));
    const Monomial ma = without_factor(hat_of(r.j), y1);
    const Monomial mb = without_factor(hat_of(r.k), y2);
    const std::size_t l1 = builder_.emit_monomial_multiple(prior(r.j), mb, 1);
    const std::size_t l2 = builder_.emit_monomial_multiple(prior(r.k), ma, 1);
    const std::size_t l3 = builder_.lincomb(l1, l2, r.alpha, r.beta);
    const std::size_t c1 = builder_.lincomb(definition(y3), definition(y1), 1, -r.alpha);
    const std::size_t c2 = builder_.lincomb(c1, definition(y2), 1, -r.beta);
    const std::size_t l4 = builder_.emit_monomial_multiple(c2, ma * mb, 1);
    return builder_.lincomb(l3, l4, 1, 1);
  }

  std::size_t step(std::size_t, const rl::Weakening& r) {
    return builder_.mul_var(prior(r.j), var_of(r.eq));
  }

  // y_t rest - (y_t - k) rest = k rest, then divide by k.
  std::size_t step(std::size_t, const rl::Simplification& r) {
    const auto& eq = pi_.lines[r.j].disjunction[r.d];
    const VarId yt = var_of(eq);
    const Scalar k = Scalar(-eq.constant);
    const Monomial rest = without_factor(hat_of(r.j), yt);
    const std::size_t l1 = builder_.emit_monomial_multiple(definition(yt), rest, 1);
    const std::size_t l2 = builder_.lincomb(prior(r.j), l1, 1, -1);
    return builder_.scale(l2, 1 / k);
  }

  // y^2 tail times tail is the square of y tail.
  std::size_t step(std::size_t, const rl::Contraction& r) {
    const VarId y = var_of(pi_.lines[r.j].disjunction[r.d1]);
    const Monomial tail = without_factor(without_factor(hat_of(r.j), y), y);
    std::size_t square = prior(r.j);
    if (!tail.is_constant()) square = builder_.emit_monomial_multiple(square, tail, 1);
    return builder_.sqrt(square, Polynomial::monomial(tail.times(y)));
  }

  void self_check(const SimulationOutput& out) const {
    CheckOptions opt;
    opt.require_refutation = pi_.is_refutation();
    const auto report = check_certificate(out.cert, opt);
    if (!report.valid)
      throw Error("InternalCheckFailure",
                  "simulation output rejected: " + report.error->message);
    for (std::size_t i = 0; i < out.line_map.size(); ++i)
      if (out.cert.lines[out.line_map[i]].poly != reslin::hat(pi_.lines[i].disjunction, out.registry).product_equation)
        throw Error("InternalCheckFailure",
                    "line " + std::to_string(i) + " does not map to its hat product");
  }

  std::span<const Disjunction> K_;
  const reslin::RlProof& pi_;
  reslin::Registry registry_;
  std::map<VarId, std::size_t> boolean_axiom_;
  std::size_t first_definition_ = 0;
  ProofBuilder builder_;
  std::map<VarId, std::size_t> definitions_;
  std::vector<std::size_t> line_map_;
};

}  // namespace

SimulationOutput simulate_reslin_b(std::span<const reslin::Disjunction> K,
                                   const reslin::RlProof& pi) {
  const auto report = reslin::check_reslin(K, pi);
  if (!report.valid)
    throw Error("InvalidInputProof", "Res-Lin proof rejected at line " +
                                         std::to_string(*report.error->line) + ": " +
                                         report.error->message);
  return Simulator(K, pi).run();
}

std::uint64_t simulation_size(const Certificate& cert) {
  std::uint64_t s = cert.lines.size();
  for (const auto& l : cert.lines) s += literal_size(l.poly) + l.poly.term_count();
  return s;
}

std::uint64_t simulation_input_measure(const reslin::RlProof& pi, const reslin::Registry& registry) {
  return reslin::size_binary(pi) + pi.lines.size() + registry.size();
}

}  // namespace algproof::xlate
