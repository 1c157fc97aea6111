#pragma once

// Seeded random inputs for property-style tests.

#include <random>
#include <vector>

#include "algproof/polynomial.hpp"

namespace algproof::testing {

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t seed) : rng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  bool coin() { return uniform(0, 1) == 1; }

  Scalar rational(int range = 9, int max_den = 4) {
    Scalar s(uniform(-range, range), uniform(1, max_den));
    s.canonicalize();
    return s;
  }

  Scalar nonzero_rational(int range = 9, int max_den = 4) {
    Scalar s = 0;
    while (sgn(s) == 0) s = rational(range, max_den);
    return s;
  }

  Monomial monomial(const std::vector<VarId>& vars, int max_degree) {
    std::vector<Monomial::Factor> f;
    const int d = uniform(0, max_degree);
    for (int i = 0; i < d; ++i) f.emplace_back(vars[uniform(0, static_cast<int>(vars.size()) - 1)], 1);
    return Monomial(std::move(f));
  }

  Polynomial polynomial(const std::vector<VarId>& vars, int max_terms = 5, int max_degree = 3,
                        bool integral = false) {
    std::vector<Term> terms;
    const int n = uniform(0, max_terms);
    for (int i = 0; i < n; ++i)
      terms.push_back({monomial(vars, max_degree), integral ? Scalar(uniform(-9, 9)) : rational()});
    return Polynomial::from_terms(std::move(terms));
  }

  Assignment point(const std::vector<VarId>& vars) {
    Assignment a;
    for (VarId v : vars) a[v] = rational(20, 7);
    return a;
  }
};

inline std::vector<VarId> xs(std::uint32_t n) {
  std::vector<VarId> v;
  for (std::uint32_t i = 1; i <= n; ++i) v.push_back(VarId::x(i));
  return v;
}

}  // namespace algproof::testing
