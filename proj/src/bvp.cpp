#include "algproof/bvp.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "algproof/builder.hpp"
#include "algproof/error.hpp"

namespace algproof::bvp {

namespace {

// Coefficients c_0..c_d of a univariate polynomial in S, lowest first.
using Univariate = std::vector<Integer>;

// prod_{k<N} (S - k)
Univariate falling_product(std::uint64_t N) {
  Univariate p{1};
  for (std::uint64_t k = 0; k < N; ++k) {
    Univariate next(p.size() + 1, 0);
    const Integer kk(static_cast<unsigned long>(k));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= p[i] * kk;
    }
    p = std::move(next);
  }
  return p;
}

// Synthetic division by S + 1; the remainder must vanish.
Univariate divide_by_s_plus_one(const Univariate& p) {
  const std::size_t d = p.size() - 1;
  Univariate q(d, 0);
  q[d - 1] = p[d];
  for (std::size_t i = d - 1; i >= 1; --i) q[i - 1] = p[i] - q[i];
  if (p[0] - q[0] != 0) throw Error("InternalCheckFailure", "S + 1 does not divide P - N!");
  return q;
}

Polynomial expand(const Univariate& c, const Polynomial& S) {
  Polynomial acc;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * S + Polynomial::constant(Scalar(c[i]));
  return acc;
}

}  // namespace

AxiomSet BvpInstance::axioms() const {
  AxiomSet a;
  a.base.push_back(G);
  for (const auto& f : booleans) a.base.push_back(f);
  return a;
}

BvpInstance gen_bvp(std::uint32_t n) {
  if (n < 1) throw Error("InvalidArgument", "n must be at least 1");
  BvpInstance inst;
  inst.n = n;
  std::vector<Term> terms{{Monomial(), Scalar(1)}};
  Integer w = 1;
  for (std::uint32_t i = 1; i <= n; ++i) {
    terms.push_back({Monomial::of(VarId::x(i)), Scalar(w)});
    w *= 2;
    const Polynomial x = Polynomial::variable(VarId::x(i));
    inst.booleans.push_back(x * x - x);
  }
  inst.G = Polynomial::from_terms(std::move(terms));
  return inst;
}

Certificate brute_force_refutation(std::uint32_t n, bool override_guard) {
  if (n > kOracleMaxN && !override_guard)
    throw Error("CostGuard", "oracle refutation for n = " + std::to_string(n) +
                                 " exceeds the cost guard (n <= " + std::to_string(kOracleMaxN) +
                                 ")");
  const BvpInstance inst = gen_bvp(n);
  const std::uint64_t N = std::uint64_t{1} << n;
  const Polynomial S = inst.G - Polynomial::constant(1);
  const Integer Nfact = factorial(static_cast<unsigned long>(N));

  // P(S) - N! = C(S) (S + 1), and S + 1 = G.
  Univariate P = falling_product(N);
  Univariate shifted = P;
  shifted[0] -= Nfact;
  const Polynomial C = expand(divide_by_s_plus_one(shifted), S);
  const Polynomial Pexp = expand(P, S);

  ProofBuilder b(inst.axioms(), SystemKind::PcSqrtZ);
  MultipleCache cache(b);

  // C * G as a sum of monomial multiples of G.
  const std::size_t g = b.axiom(0);
  std::vector<std::pair<std::size_t, Scalar>> leaves;
  for (const Term& t : C.terms()) leaves.emplace_back(cache.multiple(g, t.mono), t.coef);
  const std::size_t cg = b.weighted_sum(leaves);

  // P from the boolean axioms: P vanishes on the cube, so its multilinear
  // reduction is zero and P is the ledger sum.
  std::set<VarId> booleans;
  for (std::uint32_t i = 1; i <= n; ++i) booleans.insert(VarId::x(i));
  const MultilinearReduction red = multilinear_reduce(Pexp, booleans);
  if (!red.reduced.is_zero())
    throw Error("InternalCheckFailure", "P does not reduce to zero on the cube");
  std::vector<std::size_t> boolean_line(n + 1, SIZE_MAX);
  leaves.clear();
  for (const ReductionStep& s : red.ledger) {
    std::size_t& f = boolean_line[s.var.index()];
    if (f == SIZE_MAX) f = b.axiom(s.var.index());
    leaves.emplace_back(cache.multiple(f, s.multiplier), s.coef);
  }
  const std::size_t p = b.weighted_sum(leaves);
  b.lincomb(p, cg, 1, -1);

  Certificate cert = std::move(b).finish();
  if (cert.lines.back().poly != Polynomial::constant(Scalar(Nfact)))
    throw Error("InternalCheckFailure", "oracle did not end in (2^n)!");
  return cert;
}

DivisibilityReport audit_divisibility(const Integer& M, std::uint32_t n) {
  if (sgn(M) == 0) throw Error("ZeroConstant", "the final constant is zero");
  if (n >= 24) throw Error("SieveGuard", "2^n exceeds the sieve limit");
  DivisibilityReport r;
  r.n = n;
  r.M = M;
  r.primes_checked = primes_below((std::uint64_t{1} << n) + 1);
  for (std::uint64_t p : r.primes_checked)
    if (!mpz_divisible_ui_p(M.get_mpz_t(), static_cast<unsigned long>(p))) r.missing.push_back(p);
  r.bit_length = ceil_log2(M);
  r.passed = r.missing.empty();
  return r;
}

TraceReport trace_mod_check(const AxiomSet& axioms, std::span<const ProofLine> proof,
                            std::uint32_t n, std::uint64_t k) {
  if (n < 1 || n >= 63 || k >= (std::uint64_t{1} << n))
    throw Error("KOutOfRange", "k = " + std::to_string(k) + " is not below 2^" + std::to_string(n));
  if (!is_prime(k + 1))
    throw Error("KPlusOneNotPrime", "k + 1 = " + std::to_string(k + 1) + " is not prime");
  if (axioms.base != gen_bvp(n).axioms().base)
    throw Error("NotBvpInstance", "base axioms are not BVP_" + std::to_string(n));

  TraceReport r;
  r.k = k;
  Assignment point;
  for (std::uint32_t i = 1; i <= n; ++i) {
    r.bits.push_back(static_cast<int>((k >> (i - 1)) & 1));
    point[VarId::x(i)] = r.bits.back();
  }
  for (const auto& ext : axioms.extensions) {
    const Scalar c = evaluate(ext.definition, point);
    if (!is_integral(c))
      throw Error("NonIntegralExtensionValue",
                  ext.var.name() + " evaluates to " + to_string(c) + " at the trace point");
    point[ext.var] = c;
    r.extension_values.push_back(c.get_num());
  }
  const Integer mod(static_cast<unsigned long>(k + 1));
  r.passed = true;
  for (std::size_t i = 0; i < proof.size(); ++i) {
    const Scalar v = evaluate(proof[i].poly, point);
    if (!is_integral(v))
      throw Error("NonIntegralLineValue",
                  "line " + std::to_string(i) + " evaluates to " + to_string(v));
    Integer res;
    mpz_fdiv_r(res.get_mpz_t(), v.get_num_mpz_t(), mod.get_mpz_t());
    if (sgn(res) != 0) r.passed = false;
    r.residues.push_back(std::move(res));
  }
  return r;
}

std::vector<std::uint64_t> primes_below(std::uint64_t N) {
  if (N > kSieveMax)
    throw Error("SieveGuard", "sieve bound " + std::to_string(N) + " exceeds 2^24");
  std::vector<std::uint64_t> primes;
  if (N < 3) return primes;
  std::vector<bool> composite(N, false);
  for (std::uint64_t i = 2; i < N; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j < N; j += i) composite[j] = true;
  }
  return primes;
}

std::uint64_t primorial_bits(std::uint64_t N) {
  const auto primes = primes_below(N);
  // Balanced product keeps the multiplications cheap.
  std::vector<Integer> level;
  level.reserve(primes.size());
  for (std::uint64_t p : primes) level.emplace_back(static_cast<unsigned long>(p));
  if (level.empty()) return 0;
  while (level.size() > 1) {
    std::vector<Integer> next;
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] * level[i + 1]);
    if (level.size() % 2) next.push_back(level.back());
    level = std::move(next);
  }
  return ceil_log2(level.front());
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace algproof::bvp
