#include "algproof/builder.hpp"

#include <stdexcept>
#include <string>

#include "algproof/error.hpp"

namespace algproof {

ProofBuilder::ProofBuilder(AxiomSet axioms, SystemKind kind)
    : axioms_(std::move(axioms)), kind_(kind) {}

void ProofBuilder::require_ring(const Scalar& s) const {
  if (is_integral_system(kind_) && !is_integral(s))
    throw Error("NonIntegerScalar", "scalar " + to_string(s) + " is not an integer in " +
                                        std::string(system_name(kind_)));
}

std::size_t ProofBuilder::push(ProofLine line) {
  lines_.push_back(std::move(line));
  return lines_.size() - 1;
}

std::size_t ProofBuilder::axiom(std::size_t index) {
  return push({axioms_.axiom(index), rule::Axiom{index}});
}

std::size_t ProofBuilder::lincomb(std::size_t j, std::size_t k, const Scalar& alpha,
                                  const Scalar& beta) {
  require_ring(alpha);
  require_ring(beta);
  Polynomial p = algproof::scale(poly(j), alpha) + algproof::scale(poly(k), beta);
  return push({std::move(p), rule::LinComb{j, k, alpha, beta}});
}

std::size_t ProofBuilder::mul_var(std::size_t k, VarId v) {
  return push({algproof::mul_var(poly(k), v), rule::MulVar{k, v}});
}

std::size_t ProofBuilder::sqrt(std::size_t k, Polynomial root) {
  if (!allows_sqrt(kind_))
    throw Error("SqrtForbidden", "square root rule not available in " + std::string(system_name(kind_)));
  if (root * root != poly(k))
    throw Error("SqrtMismatch", "claimed root " + root.to_string() + " does not square to line " +
                                    std::to_string(k));
  return push({std::move(root), rule::Sqrt{k}});
}

std::size_t ProofBuilder::emit_monomial_multiple(std::size_t source, const Monomial& mono,
                                                 const Scalar& s) {
  require_ring(s);
  (void)poly(source);
  std::size_t current = source;
  for (const auto& [v, e] : mono.factors())
    for (std::uint32_t i = 0; i < e; ++i) current = mul_var(current, v);
  return scale(current, s);
}

std::size_t ProofBuilder::weighted_sum(std::span<const std::pair<std::size_t, Scalar>> leaves) {
  if (leaves.empty()) throw std::invalid_argument("weighted_sum of no lines");
  if (leaves.size() == 1) {
    const auto& [idx, c] = leaves.front();
    return c == 1 ? idx : scale(idx, c);
  }
  std::vector<std::size_t> level;
  level.reserve((leaves.size() + 1) / 2);
  for (std::size_t i = 0; i + 1 < leaves.size(); i += 2)
    level.push_back(lincomb(leaves[i].first, leaves[i + 1].first, leaves[i].second,
                            leaves[i + 1].second));
  if (leaves.size() % 2 == 1) {
    const auto& [idx, c] = leaves.back();
    level.push_back(c == 1 ? idx : scale(idx, c));
  }
  while (level.size() > 1) {
    std::vector<std::size_t> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2)
      next.push_back(lincomb(level[i], level[i + 1], 1, 1));
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  return level.front();
}

Certificate ProofBuilder::finish() && {
  return Certificate{kind_, std::move(axioms_), std::move(lines_)};
}

std::size_t MultipleCache::multiple(std::size_t source, const Monomial& mono) {
  if (mono.is_constant()) return source;
  if (auto it = cache_.find({source, mono}); it != cache_.end()) return it->second;
  // Peel the last variable: mono = prefix * v.
  const VarId v = mono.factors().back().first;
  const std::size_t prefix = multiple(source, mono.divided(v));
  const std::size_t line = builder_.mul_var(prefix, v);
  cache_.emplace(std::pair{source, mono}, line);
  return line;
}

}  // namespace algproof
