#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "algproof/error.hpp"
#include "generators.hpp"
#include "poly_text.hpp"
#include "reslin_corpus.hpp"

using namespace algproof;
using namespace algproof::testing;
using reslin::RlProof;

namespace {

bool satisfied(const LinEq& e, const Assignment& a) {
  Scalar lhs = 0;
  for (const auto& [v, c] : e.coeffs) lhs += Scalar(c) * a.at(v);
  return lhs == Scalar(e.constant);
}

bool satisfied(const Disjunction& d, const Assignment& a) {
  return std::any_of(d.begin(), d.end(), [&](const LinEq& e) { return satisfied(e, a); });
}

std::vector<std::size_t> premises(const reslin::RlRule& r) {
  return std::visit(
      [](const auto& x) -> std::vector<std::size_t> {
        using R = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<R, rl::Resolution>) return {x.j, x.k};
        else if constexpr (std::is_same_v<R, rl::Axiom> || std::is_same_v<R, rl::BooleanAxiom>)
          return {};
        else return {x.j};
      },
      r);
}

reslin::RlReport check(const ReslinFile& f) { return reslin::check_reslin(f.axioms, f.proof); }

}  // namespace

TEST_CASE("check_reslin: four-line refutation of {x=0},{x=1}") {
  const auto f = reslin_two_points();
  REQUIRE(f.proof.lines.size() == 4);
  CHECK(f.proof.lines[2].disjunction == Disjunction{eq({}, -1)});
  CHECK(f.proof.lines[3].disjunction.empty());
  const auto r = check(f);
  CHECK(r.valid);
  CHECK(r.refutation);
  CHECK(r.line_count == 4);
}

TEST_CASE("check_reslin: contraction and simplification examples") {
  std::vector<Disjunction> K{{eq({{1, 1}}, 1), eq({{1, 1}}, 1)}, {eq({}, 0)}};
  RlProof p;
  p.lines.push_back({K[0], rl::Axiom{0}});
  p.lines.push_back({{eq({{1, 1}}, 1)}, rl::Contraction{0, 0, 1}});
  auto r = reslin::check_reslin(K, p);
  CHECK(r.valid);
  CHECK_FALSE(r.refutation);

  p.lines.push_back({K[1], rl::Axiom{1}});
  p.lines.push_back({{}, rl::Simplification{2, 0}});
  r = reslin::check_reslin(K, p);
  CHECK_FALSE(r.valid);
  REQUIRE(r.error);
  CHECK(r.error->code == ErrorCode::SimplificationOnZero);
  CHECK(r.error->line == 3);
}

TEST_CASE("check_reslin: every error code") {
  const auto base = reslin_two_points();
  auto expect = [&](RlProof p, ErrorCode code, std::size_t line) {
    const auto r = reslin::check_reslin(base.axioms, p);
    CHECK_FALSE(r.valid);
    REQUIRE(r.error);
    CHECK(r.error->code == code);
    CHECK(r.error->line == line);
  };
  auto p = base.proof;
  p.lines[2].rule = res(0, 2, 0, 0, 1, -1);
  expect(p, ErrorCode::BadIndex, 2);
  p = base.proof;
  p.lines[1].rule = rl::Axiom{5};
  expect(p, ErrorCode::BadIndex, 1);
  p = base.proof;
  p.lines[2].rule = res(0, 1, 1, 0, 1, -1);
  expect(p, ErrorCode::BadPosition, 2);
  p = base.proof;
  p.lines[2].disjunction = {eq({}, -2)};
  expect(p, ErrorCode::RuleMismatch, 2);
  p = base.proof;
  p.lines[2].rule = reslin::rule::Resolution{0, 1, 0, 0, Scalar(1, 2), -1};
  expect(p, ErrorCode::NonIntegerScalar, 2);
  p = base.proof;
  p.lines[3].rule = rl::Contraction{2, 0, 0};
  expect(p, ErrorCode::BadPosition, 3);

  std::vector<Disjunction> K{{eq({{1, 1}}, 0), eq({{1, 1}}, 1)}};
  RlProof q;
  q.lines.push_back({K[0], rl::Axiom{0}});
  q.lines.push_back({{eq({{1, 1}}, 0)}, rl::Contraction{0, 0, 1}});
  const auto r = reslin::check_reslin(K, q);
  REQUIRE(r.error);
  CHECK(r.error->code == ErrorCode::ContractionUnequal);
  CHECK(r.error->line == 1);
}

TEST_CASE("size measures") {
  Disjunction d{eq({{1, 3}}, 5)};
  CHECK(reslin::size_unary(d) == 3);
  CHECK(reslin::size_binary(d) == 2);
  CHECK(reslin::size_unary(Disjunction{}) == 0);
  CHECK(reslin::size_binary(Disjunction{}) == 0);
  Disjunction b{eq({{1, 1}}, 0), eq({{1, 1}}, 1)};
  CHECK(reslin::size_unary(b) == 2);
  CHECK(reslin::size_binary(b) == 0);

  // Additive over lines, invariant under permuting disjuncts.
  for (const auto& [name, f] : reslin_corpus()) {
    Integer u = 0;
    std::uint64_t bin = 0;
    for (const auto& l : f.proof.lines) {
      auto rev = l.disjunction;
      std::reverse(rev.begin(), rev.end());
      CHECK(reslin::size_unary(rev) == reslin::size_unary(l.disjunction));
      CHECK(reslin::size_binary(rev) == reslin::size_binary(l.disjunction));
      u += reslin::size_unary(l.disjunction);
      bin += reslin::size_binary(l.disjunction);
    }
    CHECK(reslin::size_unary(f.proof) == u);
    CHECK(reslin::size_binary(f.proof) == bin);
  }
}

TEST_CASE("canonical_form examples") {
  const auto k = reslin::canonical_form(eq({{1, 1}}, 0));
  CHECK(k.coeffs == std::map<VarId, Integer>{{VarId::x(1), 1}});
  CHECK(k.constant == 0);
  CHECK(reslin::canonical_form(eq({{1, 1}}, 1)) == reslin::canonical_form(eq({{1, 1}}, 1)));
  CHECK_FALSE(reslin::canonical_form(eq({{1, 2}}, 2)) == reslin::canonical_form(eq({{1, 1}}, 1)));
}

TEST_CASE("build_registry examples") {
  const auto f = reslin_two_points();
  const auto reg = reslin::build_registry(f.axioms, f.proof);
  CHECK(reg.size() == 3);
  CHECK(reg.find(reslin::canonical_form(eq({{1, 1}}, 0))) == VarId::y(1));
  CHECK(reg.find(reslin::canonical_form(eq({{1, 1}}, 1))) == VarId::y(2));
  CHECK(reg.find(reslin::canonical_form(eq({}, -1))) == VarId::y(3));
  const auto defs = reg.definitions();
  CHECK(defs[0].definition == P("x1"));
  CHECK(defs[1].definition == P("x1 - 1"));
  CHECK(defs[2].definition == P("1"));

  CHECK(reslin::build_registry({}, RlProof{}).size() == 0);

  std::vector<Disjunction> K{{eq({{1, 1}}, 1)}, {eq({{2, 1}}, 0), eq({{1, 1}}, 1)}};
  CHECK(reslin::build_registry(K, RlProof{}).size() == 2);
}

TEST_CASE("hat examples") {
  const auto f = reslin_two_points();
  const auto reg = reslin::build_registry(f.axioms, f.proof);
  const auto h = reslin::hat({eq({{1, 1}}, 0), eq({{1, 1}}, 1)}, reg);
  CHECK(h.product_equation == P("y1*y2"));
  REQUIRE(h.definitions.size() == 2);
  CHECK(h.definitions[0].definition == P("x1"));
  CHECK(h.definitions[1].definition == P("x1 - 1"));
  CHECK(reslin::hat({}, reg).product_equation == P("1"));
  CHECK(reslin::hat({eq({{1, 1}}, 1), eq({{1, 1}}, 1)}, reg).product_equation == P("y2^2"));
  try {
    reslin::hat({eq({{2, 1}}, 7)}, reg);
    FAIL("expected UnregisteredForm");
  } catch (const Error& e) {
    CHECK(e.code() == "UnregisteredForm");
  }
}

TEST_CASE("corpus proofs are valid refutations") {
  for (const auto& [name, f] : reslin_corpus()) {
    INFO(name);
    const auto r = check(f);
    CHECK(r.valid);
    CHECK(r.refutation);
  }
}

TEST_CASE("property: rule soundness sampling") {
  Gen g(2024);
  const auto vars = xs(3);
  std::vector<Assignment> points;
  for (int m = 0; m < 8; ++m) {
    Assignment a;
    for (std::uint32_t i = 0; i < 3; ++i) a[vars[i]] = (m >> i) & 1;
    points.push_back(a);
  }
  for (int i = 0; i < 120; ++i) {
    Assignment a;
    for (VarId v : vars) a[v] = g.uniform(-5, 5);
    points.push_back(a);
  }
  auto random_eq = [&]() {
    std::map<VarId, Integer> c;
    for (VarId v : vars)
      if (g.coin()) c[v] = g.uniform(-2, 2);
    return reslin::make_eq(std::move(c), g.uniform(-2, 2));
  };
  auto random_disj = [&]() {
    Disjunction d;
    const int n = g.uniform(1, 3);
    for (int i = 0; i < n; ++i) d.push_back(random_eq());
    if (g.coin()) d.push_back(d[0]);
    return d;
  };

  int applied = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Disjunction> K{random_disj(), random_disj()};
    std::vector<reslin::RlLine> lines{{K[0], rl::Axiom{0}}, {K[1], rl::Axiom{1}}};
    lines.push_back({{}, rl::BooleanAxiom{vars[g.uniform(0, 2)]}});
    lines.back().disjunction = *reslin::apply_rule(K, std::span(lines).first(2), lines.back().rule).result;
    reslin::RlRule rule;
    const std::size_t j = g.uniform(0, 2), k = g.uniform(0, 2);
    const auto& dj = lines[j].disjunction;
    switch (g.uniform(0, 3)) {
      case 0:
        rule = res(j, k, g.uniform(0, dj.size() - 1), g.uniform(0, lines[k].disjunction.size() - 1),
                   g.uniform(-3, 3), g.uniform(-3, 3));
        break;
      case 1:
        rule = rl::Weakening{j, random_eq()};
        break;
      case 2:
        rule = rl::Simplification{j, static_cast<std::size_t>(g.uniform(0, dj.size() - 1))};
        break;
      default:
        rule = rl::Contraction{j, 0, dj.size() - 1};
        break;
    }
    const auto c = reslin::apply_rule(K, lines, rule);
    if (!c.result) continue;
    ++applied;
    for (const auto& a : points) {
      bool ok = true;
      for (std::size_t p : premises(rule)) ok = ok && satisfied(lines[p].disjunction, a);
      if (ok) CHECK(satisfied(*c.result, a));
    }
  }
  CHECK(applied > 150);

  // Every line of the corpus, checked the same way on {0,1}^n.
  for (const auto& [name, f] : reslin_corpus()) {
    for (std::size_t i = 0; i < f.proof.lines.size(); ++i) {
      const auto& line = f.proof.lines[i];
      for (int m = 0; m < 8; ++m) {
        Assignment a;
        for (std::uint32_t v = 0; v < 3; ++v) a[vars[v]] = (m >> v) & 1;
        bool ok = true;
        for (std::size_t p : premises(line.rule)) ok = ok && satisfied(f.proof.lines[p].disjunction, a);
        if (std::holds_alternative<rl::Axiom>(line.rule))
          ok = ok && satisfied(line.disjunction, a);
        if (ok) CHECK(satisfied(line.disjunction, a));
      }
    }
  }
}

namespace {

// Reorders every line's disjuncts and rewrites positions to match.
RlProof permuted(const RlProof& p, Gen& g) {
  std::vector<std::vector<std::size_t>> inverse;
  RlProof out;
  for (const auto& l : p.lines) {
    std::vector<std::size_t> perm(l.disjunction.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), g.rng);
    std::vector<std::size_t> inv(perm.size());
    Disjunction d(perm.size());
    for (std::size_t n = 0; n < perm.size(); ++n) {
      d[n] = l.disjunction[perm[n]];
      inv[perm[n]] = n;
    }
    auto at = [&](std::size_t line, std::size_t pos) {
      return pos < inverse.at(line).size() ? inverse[line][pos] : pos;
    };
    reslin::RlRule r = l.rule;
    if (auto* x = std::get_if<rl::Resolution>(&r)) {
      x->dj = at(x->j, x->dj);
      x->dk = at(x->k, x->dk);
    } else if (auto* s = std::get_if<rl::Simplification>(&r)) {
      s->d = at(s->j, s->d);
    } else if (auto* c = std::get_if<rl::Contraction>(&r)) {
      c->d1 = at(c->j, c->d1);
      c->d2 = at(c->j, c->d2);
    }
    out.lines.push_back({std::move(d), r});
    inverse.push_back(std::move(inv));
  }
  return out;
}

}  // namespace

TEST_CASE("property: permuting disjuncts preserves the verdict") {
  Gen g(9);
  for (const auto& [name, f] : reslin_corpus()) {
    INFO(name);
    for (int t = 0; t < 10; ++t) {
      CHECK(reslin::check_reslin(f.axioms, permuted(f.proof, g)).valid);
      auto broken = f.proof;
      broken.lines[broken.lines.size() / 2].disjunction.push_back(eq({{3, 1}}, 9));
      const auto expected = reslin::check_reslin(f.axioms, broken);
      const auto got = reslin::check_reslin(f.axioms, permuted(broken, g));
      CHECK(got.valid == expected.valid);
      REQUIRE(got.error);
      CHECK(got.error->code == expected.error->code);
      CHECK(got.error->line == expected.error->line);
    }
  }
}

TEST_CASE("property: hat product vanishes iff the disjunction holds") {
  Gen g(5);
  for (const auto& [name, f] : reslin_corpus()) {
    const auto reg = reslin::build_registry(f.axioms, f.proof);
    const auto defs = reg.definitions();
    for (int t = 0; t < 40; ++t) {
      Assignment a;
      for (VarId v : xs(3)) a[v] = t < 8 ? Scalar((t >> (v.index() - 1)) & 1) : Scalar(g.uniform(-5, 5));
      for (const auto& d : defs) a[d.var] = evaluate(d.definition, a);
      for (const auto& l : f.proof.lines) {
        const auto h = reslin::hat(l.disjunction, reg);
        CHECK((evaluate(h.product_equation, a) == 0) == satisfied(l.disjunction, a));
      }
    }
  }
}
