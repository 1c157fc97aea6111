#include <algorithm>
#include <map>
#include <set>

#include "algproof/builder.hpp"
#include "algproof/error.hpp"
#include "algproof/xlate.hpp"

namespace algproof::xlate {

namespace {

Integer power(const Integer& base, std::uint64_t e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error("InternalCheckFailure", message);
}

std::map<VarId, std::size_t> extension_positions(const AxiomSet& axioms) {
  std::map<VarId, std::size_t> pos;
  for (std::size_t i = 0; i < axioms.extensions.size(); ++i) pos[axioms.extensions[i].var] = i;
  return pos;
}

// Exponent vectors over the factor list (M..., deltas..., L...).
using Exponents = std::vector<std::uint64_t>;

void add_into(Exponents& a, const Exponents& b, std::uint64_t times = 1) {
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += times * b[i];
}

class Rationalizer {
 public:
  Rationalizer(const AxiomSet& axioms, std::span<const ProofLine> proof, RationalizeOptions opt)
      : axioms_(axioms), proof_(proof), opt_(opt), t_(compute_T(axioms)),
        primed_(primed_axioms(axioms, t_)), pos_(extension_positions(axioms)) {}

  RationalizeOutput run() {
    phase_zero();
    phase_one();
    if (auto e = verify_phase_one(axioms_, proof_, phase1_, t_))
      throw Error("InternalCheckFailure", e->code + ": " + e->message);
    Certificate cert = phase_two();

    const auto report = check_certificate(cert);
    require(report.valid, "Z output rejected: " + (report.error ? report.error->message : ""));
    state_.final_constant = report.final_constant->get_num();
    require(Scalar(state_.final_constant) == Scalar(state_.F) * state_.input_final,
            "final constant is not F times the input constant");
    if (exponents_) {
      require(expand(*exponents_) == state_.F, "F does not match its factorization");
      state_.F_exponents = exponents_;
    }
    return {std::move(cert), std::move(phase1_), std::move(state_)};
  }

 private:
  // ------------------------------------------------------------- phase 0
  void phase_zero() {
    state_.M = t_.M;
    state_.T = t_.T;
    state_.alpha = t_.alpha;
    std::set<Integer> deltas;
    for (const auto& l : proof_) {
      state_.L.push_back(denominator_product(l.poly));
      if (const auto* c = std::get_if<rule::LinComb>(&l.rule)) {
        deltas.insert(c->alpha.get_den());
        deltas.insert(c->beta.get_den());
        pairs_.insert({c->alpha, c->beta});
      }
    }
    state_.deltas.assign(deltas.begin(), deltas.end());
    state_.input_final = proof_.back().poly.constant_term();

    if (opt_.faithful_constants) {
      const std::size_t m = t_.M.size();
      factors_ = state_.M;
      factors_.insert(factors_.end(), state_.deltas.begin(), state_.deltas.end());
      factors_.insert(factors_.end(), state_.L.begin(), state_.L.end());
      // T_i = M_i * prod T_j^alpha_ij, expanded over M.
      for (std::size_t i = 0; i < m; ++i) {
        Exponents v(factors_.size(), 0);
        v[i] = 1;
        for (std::size_t j = 0; j < i; ++j) add_into(v, t_vectors_[j], t_.alpha[i][j]);
        t_vectors_.push_back(std::move(v));
      }
      exponents_ = Exponents(factors_.size(), 0);
    }
  }

  Integer expand(const Exponents& e) const {
    Integer r = 1;
    for (std::size_t i = 0; i < e.size(); ++i) r *= power(factors_[i], e[i]);
    return r;
  }

  std::size_t delta_slot(const Integer& q) const {
    const auto it = std::lower_bound(state_.deltas.begin(), state_.deltas.end(), q);
    return t_.M.size() + static_cast<std::size_t>(it - state_.deltas.begin());
  }

  // ------------------------------------------------------------- phase 1
  void push1(std::size_t line, std::optional<VarId> tag) {
    phase1_.push_back({b1_.lines()[line], current_, tag});
  }

  void phase_one() {
    for (current_ = 0; current_ < proof_.size(); ++current_) {
      const ProofLine& l = proof_[current_];
      std::size_t at = 0;
      if (const auto* a = std::get_if<rule::Axiom>(&l.rule)) {
        at = b1_.axiom(a->index);
        if (a->index >= axioms_.base.size()) {
          const std::size_t e = a->index - axioms_.base.size();
          push1(at, axioms_.extensions[e].var);
          at = b1_.scale(at, Scalar(1) / Scalar(t_.T[e]));
        }
      } else if (const auto* c = std::get_if<rule::LinComb>(&l.rule)) {
        at = b1_.lincomb(rep_[c->j], rep_[c->k], c->alpha, c->beta);
      } else if (const auto* m = std::get_if<rule::MulVar>(&l.rule)) {
        at = b1_.mul_var(rep_[m->k], m->var);
        if (m->var.is_y()) {
          push1(at, m->var);
          at = b1_.scale(at, Scalar(1) / Scalar(t_.T[pos_.at(m->var)]));
        }
      } else {
        const auto& s = std::get<rule::Sqrt>(l.rule);
        at = b1_.sqrt(rep_[s.k], substitute(l.poly, y_scaling(axioms_, t_, true)));
      }
      push1(at, std::nullopt);
      rep_.push_back(at);
    }
  }

  // ------------------------------------------------------------- phase 2
  Certificate phase_two() {
    ProofBuilder out(primed_, SystemKind::ExtPcSqrtZ);
    const auto& lines = b1_.lines();
    require(std::holds_alternative<rule::Axiom>(lines[0].rule), "first line is not an axiom");
    std::vector<std::size_t> block{out.axiom(std::get<rule::Axiom>(lines[0].rule).index)};
    Integer F = 1;

    auto rescale = [&](const Integer& by) {
      std::vector<std::size_t> next;
      next.reserve(block.size() + 1);
      for (std::size_t b : block) next.push_back(out.lincomb(b, b, Scalar(by), 0));
      return next;
    };

    for (std::size_t r = 1; r < lines.size(); ++r) {
      const StepRule& rule = lines[r].rule;
      if (const auto* a = std::get_if<rule::Axiom>(&rule)) {
        const std::size_t ax = out.axiom(a->index);
        auto next = rescale(1);
        next.push_back(out.lincomb(ax, ax, Scalar(F), 0));
        block = std::move(next);
      } else if (const auto* m = std::get_if<rule::MulVar>(&rule)) {
        auto next = rescale(1);
        next.push_back(out.mul_var(block[m->k], m->var));
        block = std::move(next);
      } else if (const auto* c = std::get_if<rule::LinComb>(&rule)) {
        const Integer q1 = c->alpha.get_den(), q2 = c->beta.get_den();
        const Integer q = q1 * q2;
        note_lincomb(*c, q1, q2);
        auto next = rescale(q);
        next.push_back(out.lincomb(block[c->j], block[c->k], Scalar(c->alpha.get_num() * q2),
                                   Scalar(c->beta.get_num() * q1)));
        F *= q;
        block = std::move(next);
      } else {
        const auto& s = std::get<rule::Sqrt>(rule);
        const Integer Mp = sqrt_multiplier(r);
        require(scale(lines[r].poly, Scalar(Mp)).is_integral(), "M' does not clear the root");
        const std::size_t square = out.lincomb(block[s.k], block[s.k], Scalar(F * Mp * Mp), 0);
        auto next = rescale(Mp);
        F *= Mp;
        next.push_back(out.sqrt(square, scale(lines[r].poly, Scalar(F))));
        block = std::move(next);
      }
    }
    state_.F = F;
    Certificate cert = std::move(out).finish();
    const std::size_t t = lines.size();
    require(cert.lines.size() <= 2 * t * t + t, "phase 2 exceeded its line bound");
    return cert;
  }

  void note_lincomb(const rule::LinComb& c, const Integer& q1, const Integer& q2) {
    if (!exponents_) return;
    if (pairs_.count({c.alpha, c.beta})) {
      ++(*exponents_)[delta_slot(q1)];
      ++(*exponents_)[delta_slot(q2)];
      return;
    }
    for (std::size_t f = 0; f < t_.T.size(); ++f)
      if (c.beta == 0 && c.alpha == Scalar(1) / Scalar(t_.T[f])) {
        add_into(*exponents_, t_vectors_[f]);
        return;
      }
    require(false, "linear combination outside the scalar discipline");
  }

  // Case 4 constant: the lcm of the root's denominators, or L_k * prod T_j^a_j.
  Integer sqrt_multiplier(std::size_t r) {
    const Polynomial& root = b1_.lines()[r].poly;
    if (!opt_.faithful_constants) return denominator_lcm(root);
    const std::size_t k = phase1_[r].provenance;
    const Polynomial& original = proof_[k].poly;
    Integer Mp = state_.L[k];
    (*exponents_)[t_.M.size() + state_.deltas.size() + k] += 1;
    for (std::size_t j = 0; j < t_.T.size(); ++j) {
      const std::uint32_t a = max_degree_in(original, axioms_.extensions[j].var);
      Mp *= power(t_.T[j], a);
      add_into(*exponents_, t_vectors_[j], a);
    }
    return Mp;
  }

  const AxiomSet& axioms_;
  std::span<const ProofLine> proof_;
  RationalizeOptions opt_;
  TValues t_;
  AxiomSet primed_;
  std::map<VarId, std::size_t> pos_;
  ProofBuilder b1_{primed_, SystemKind::ExtPcSqrtQ};
  std::vector<PhaseOneLine> phase1_;
  std::vector<std::size_t> rep_;
  std::size_t current_ = 0;
  std::set<std::pair<Scalar, Scalar>> pairs_;
  RationalizeState state_;
  std::vector<Integer> factors_;
  std::vector<Exponents> t_vectors_;
  std::optional<Exponents> exponents_;
};

}  // namespace

TValues compute_T(const AxiomSet& axioms) {
  TValues t;
  for (std::size_t i = 0; i < axioms.extensions.size(); ++i) {
    const Polynomial& q = axioms.extensions[i].definition;
    Integer Ti = denominator_product(q);
    t.M.push_back(Ti);
    std::vector<std::uint32_t> row(i, 0);
    for (std::size_t j = 0; j < i; ++j) {
      row[j] = max_degree_in(q, axioms.extensions[j].var);
      Ti *= power(t.T[j], row[j]);
    }
    t.T.push_back(Ti);
    t.alpha.push_back(std::move(row));
    require(primed_definition(axioms, i, t).is_integral(),
            "primed definition of " + axioms.extensions[i].var.name() + " is not integral");
  }
  return t;
}

Bindings y_scaling(const AxiomSet& axioms, const TValues& t, bool inverse) {
  Bindings b;
  for (std::size_t i = 0; i < t.T.size(); ++i) {
    const VarId y = axioms.extensions[i].var;
    const Scalar f = inverse ? Scalar(1) / Scalar(t.T[i]) : Scalar(t.T[i]);
    b[y] = Polynomial::monomial(Monomial::of(y), f);
  }
  return b;
}

Polynomial primed_definition(const AxiomSet& axioms, std::size_t i, const TValues& t) {
  return scale(substitute(axioms.extensions[i].definition, y_scaling(axioms, t, true)),
               Scalar(t.T.at(i)));
}

AxiomSet primed_axioms(const AxiomSet& axioms, const TValues& t) {
  AxiomSet out{axioms.base, {}};
  for (std::size_t i = 0; i < axioms.extensions.size(); ++i)
    out.extensions.push_back({axioms.extensions[i].var, primed_definition(axioms, i, t)});
  return out;
}

std::optional<PhaseOneError> verify_phase_one(const AxiomSet& axioms,
                                              std::span<const ProofLine> original,
                                              std::span<const PhaseOneLine> primed,
                                              const TValues& t) {
  const Bindings up = y_scaling(axioms, t, false);
  const auto pos = extension_positions(axioms);
  std::set<std::pair<Scalar, Scalar>> pairs;
  for (const auto& l : original)
    if (const auto* c = std::get_if<rule::LinComb>(&l.rule)) pairs.insert({c->alpha, c->beta});

  for (std::size_t i = 0; i < primed.size(); ++i) {
    const PhaseOneLine& p = primed[i];
    if (p.provenance >= original.size())
      return PhaseOneError{i, "SubstitutionIdentityFailure", "provenance out of range"};
    Polynomial expected = original[p.provenance].poly;
    if (p.scaled_by) {
      const auto it = pos.find(*p.scaled_by);
      if (it == pos.end())
        return PhaseOneError{i, "SubstitutionIdentityFailure",
                             p.scaled_by->name() + " is not an extension variable"};
      expected = scale(expected, Scalar(t.T[it->second]));
    }
    if (substitute(p.line.poly, up) != expected)
      return PhaseOneError{i, "SubstitutionIdentityFailure",
                           "line does not map back to original line " +
                               std::to_string(p.provenance)};
    if (const auto* c = std::get_if<rule::LinComb>(&p.line.rule)) {
      bool ok = pairs.count({c->alpha, c->beta}) > 0;
      for (std::size_t f = 0; !ok && f < t.T.size(); ++f)
        ok = c->beta == 0 && c->alpha == Scalar(1) / Scalar(t.T[f]);
      if (!ok)
        return PhaseOneError{i, "ScalarDisciplineFailure",
                             "scalars " + to_string(c->alpha) + ", " + to_string(c->beta) +
                                 " are neither an original pair nor 1/T"};
    }
  }
  return std::nullopt;
}

RationalizeOutput rationalize(const AxiomSet& axioms, std::span<const ProofLine> proof,
                              const RationalizeOptions& options) {
  // Base axioms may mention y only where T = 1, so that y -> y/T fixes them.
  const TValues tv = compute_T(axioms);
  std::map<VarId, Integer> t_of;
  for (std::size_t i = 0; i < axioms.extensions.size(); ++i) t_of[axioms.extensions[i].var] = tv.T[i];
  for (std::size_t i = 0; i < axioms.base.size(); ++i) {
    if (!axioms.base[i].is_integral())
      throw Error("NonIntegerBaseAxiom",
                  "base axiom " + std::to_string(i) + " has a non-integer coefficient");
    for (VarId v : axioms.base[i].variables()) {
      if (!v.is_y()) continue;
      const auto it = t_of.find(v);
      if (it == t_of.end() || it->second != 1)
        throw Error("InvalidInputProof", "base axiom " + std::to_string(i) +
                                             " mentions extension variable " + v.name() +
                                             " whose definition has denominators");
    }
  }
  const auto report = check_refutation(axioms, proof, SystemKind::ExtPcSqrtQ);
  if (!report.valid) {
    std::string where = report.error->line ? " at line " + std::to_string(*report.error->line) : "";
    throw Error("InvalidInputProof", "input is not an Ext-PC√_Q refutation" + where + ": " +
                                         report.error->message);
  }
  return Rationalizer(axioms, proof, options).run();
}

}  // namespace algproof::xlate
