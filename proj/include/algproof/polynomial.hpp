#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algproof/scalar.hpp"

namespace algproof {

enum class VarKind : std::uint8_t { X, Y };

// A variable x<k> or y<k>, k >= 1. Ordered X before Y, then by index.
class VarId {
 public:
  constexpr VarId() = default;
  constexpr VarId(VarKind kind, std::uint32_t index) : kind_(kind), index_(index) {}

  static constexpr VarId x(std::uint32_t index) { return {VarKind::X, index}; }
  static constexpr VarId y(std::uint32_t index) { return {VarKind::Y, index}; }

  constexpr VarKind kind() const { return kind_; }
  constexpr std::uint32_t index() const { return index_; }
  constexpr bool is_x() const { return kind_ == VarKind::X; }
  constexpr bool is_y() const { return kind_ == VarKind::Y; }

  std::string name() const;
  // Throws Error("ParseError") unless `text` is x<k> or y<k> with canonical k >= 1.
  static VarId parse(std::string_view text);

  friend constexpr auto operator<=>(const VarId&, const VarId&) = default;

 private:
  VarKind kind_ = VarKind::X;
  std::uint32_t index_ = 1;
};

// Power product of variables. Factors are kept sorted by VarId with positive
// exponents; the empty product is the constant monomial.
//
// The ordering is graded lexicographic: higher total degree first, ties broken
// lexicographically with x1 > x2 > ... > y1 > y2 > ...
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  // Accepts factors in any order; merges repeats and drops zero exponents.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(VarId v, std::uint32_t exponent = 1);

  std::span<const Factor> factors() const { return factors_; }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t exponent(VarId v) const;
  bool is_constant() const { return factors_.empty(); }

  Monomial times(VarId v, std::uint32_t exponent = 1) const;
  // Exponent of v lowered by `exponent`; requires exponent(v) >= exponent.
  Monomial divided(VarId v, std::uint32_t exponent = 1) const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

struct Term {
  Monomial mono;
  Scalar coef;

  friend bool operator==(const Term& a, const Term& b) {
    return a.mono == b.mono && a.coef == b.coef;
  }
};

// Sparse multivariate polynomial with exact rational coefficients, held in
// canonical form: terms sorted by descending monomial order, no zero
// coefficients, no repeated monomials. Structural equality is mathematical
// equality.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(const Scalar& c);
  static Polynomial variable(VarId v);
  static Polynomial monomial(const Monomial& m, const Scalar& c = 1);
  // Sums repeated monomials and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  std::span<const Term> terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (0 if absent).
  Scalar constant_term() const;
  // -1 for the zero polynomial.
  int degree() const;
  Scalar coefficient(const Monomial& m) const;
  std::set<VarId> variables() const;
  bool is_integral() const;

  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

 private:
  explicit Polynomial(std::vector<Term> canonical_terms) : terms_(std::move(canonical_terms)) {}
  friend Polynomial scale(const Polynomial&, const Scalar&);
  friend Polynomial mul_monomial(const Polynomial&, const Monomial&, const Scalar&);

  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial scale(const Polynomial& p, const Scalar& s);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial mul_var(const Polynomial& p, VarId v);
// s * m * p in one pass.
Polynomial mul_monomial(const Polynomial& p, const Monomial& m, const Scalar& s = 1);
Polynomial power(const Polynomial& p, std::uint32_t e);

using Bindings = std::map<VarId, Polynomial>;
using Assignment = std::map<VarId, Scalar>;

// Simultaneous substitution; unbound variables are left in place.
Polynomial substitute(const Polynomial& p, const Bindings& bindings);
// Throws Error("UnboundVariable") if p mentions a variable missing from a.
Scalar evaluate(const Polynomial& p, const Assignment& a);

// Bit size with the literal rule: sum over coefficients p/q (lowest terms) of
// ceil(log2 |p|) + ceil(log2 q). Coefficients +-1 contribute nothing.
std::uint64_t literal_size(const Polynomial& p);
// Diagnostic: sum of binary digit counts of numerators and denominators > 1.
std::uint64_t size_bit_length(const Polynomial& p);
// Product (not lcm) of the coefficient denominators; 1 for integral p.
Integer denominator_product(const Polynomial& p);
// Least common multiple of the coefficient denominators.
Integer denominator_lcm(const Polynomial& p);
// Largest exponent of v over all terms.
std::uint32_t max_degree_in(const Polynomial& p, VarId v);

// One rewrite x^e*r -> x^(e-1)*r + x^(e-2)*r*(x^2 - x), recorded as
// coef * multiplier * (var^2 - var).
struct ReductionStep {
  Monomial multiplier;
  Scalar coef;
  VarId var;
};

struct MultilinearReduction {
  Polynomial reduced;
  std::vector<ReductionStep> ledger;
};

// p = reduced + sum(coef * multiplier * (var^2 - var)) over the ledger, with
// `reduced` multilinear in every boolean variable.
MultilinearReduction multilinear_reduce(const Polynomial& p, const std::set<VarId>& boolean_vars);

}  // namespace algproof
