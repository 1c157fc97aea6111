#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "algproof/proof.hpp"

namespace algproof::bvp {

// 1 + x1 + 2 x2 + ... + 2^(n-1) xn = 0 with xi^2 - xi = 0.
struct BvpInstance {
  std::uint32_t n = 0;
  Polynomial G;
  std::vector<Polynomial> booleans;

  // Base [G, F_1, ..., F_n], no extensions.
  AxiomSet axioms() const;
};

BvpInstance gen_bvp(std::uint32_t n);

constexpr std::uint32_t kOracleMaxN = 5;

// Z refutation of gen_bvp(n) ending in (2^n)!. Throws Error("CostGuard") for
// n > kOracleMaxN unless `override_guard`.
Certificate brute_force_refutation(std::uint32_t n, bool override_guard = false);

struct DivisibilityReport {
  std::uint32_t n = 0;
  Integer M;
  std::vector<std::uint64_t> primes_checked;  // every prime p <= 2^n
  std::vector<std::uint64_t> missing;
  std::uint64_t bit_length = 0;               // ceil(log2 |M|)
  bool passed = false;
};

// Throws Error("ZeroConstant") for M = 0.
DivisibilityReport audit_divisibility(const Integer& M, std::uint32_t n);

struct TraceReport {
  std::uint64_t k = 0;
  std::vector<int> bits;               // b_1 .. b_n
  std::vector<Integer> extension_values;  // c_1 .. c_m
  std::vector<Integer> residues;       // line values mod k+1, in [0, k]
  bool passed = false;
};

// Evaluates every line at x = bits of k and y = forward-computed extension
// values, reducing mod k+1. Errors: KOutOfRange, KPlusOneNotPrime,
// NotBvpInstance, NonIntegralExtensionValue, NonIntegralLineValue.
TraceReport trace_mod_check(const AxiomSet& axioms, std::span<const ProofLine> proof,
                            std::uint32_t n, std::uint64_t k);

constexpr std::uint64_t kSieveMax = std::uint64_t{1} << 24;

// Primes p < N in ascending order; Error("SieveGuard") when N > 2^24.
std::vector<std::uint64_t> primes_below(std::uint64_t N);
// ceil(log2 of the product of all primes below N).
std::uint64_t primorial_bits(std::uint64_t N);
bool is_prime(std::uint64_t p);

}  // namespace algproof::bvp
