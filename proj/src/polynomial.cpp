#include "algproof/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "algproof/error.hpp"

namespace algproof {

// ---------------------------------------------------------------- VarId

std::string VarId::name() const {
  return (is_x() ? "x" : "y") + std::to_string(index_);
}

VarId VarId::parse(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'x' && text[0] != 'y'))
    throw Error("ParseError", "bad variable name '" + std::string(text) + "'");
  const auto digits = text.substr(1);
  if (digits.size() > 9 || digits[0] == '0' ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error("ParseError", "bad variable name '" + std::string(text) + "'");
  const auto index = static_cast<std::uint32_t>(std::stoul(std::string(digits)));
  return {text[0] == 'x' ? VarKind::X : VarKind::Y, index};
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v)
      factors_.back().second += e;
    else
      factors_.emplace_back(v, e);
    degree_ += e;
  }
}

Monomial Monomial::of(VarId v, std::uint32_t exponent) {
  return Monomial({{v, exponent}});
}

std::uint32_t Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, VarId key) { return f.first < key; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::times(VarId v, std::uint32_t exponent) const {
  Monomial out = *this;
  if (exponent == 0) return out;
  auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), v,
                             [](const Factor& f, VarId key) { return f.first < key; });
  if (it != out.factors_.end() && it->first == v)
    it->second += exponent;
  else
    out.factors_.insert(it, {v, exponent});
  out.degree_ += exponent;
  return out;
}

Monomial Monomial::divided(VarId v, std::uint32_t exponent) const {
  Monomial out = *this;
  if (exponent == 0) return out;
  auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), v,
                             [](const Factor& f, VarId key) { return f.first < key; });
  if (it == out.factors_.end() || it->first != v || it->second < exponent)
    throw std::invalid_argument("Monomial::divided: " + v.name() + " does not divide " + to_string());
  it->second -= exponent;
  if (it->second == 0) out.factors_.erase(it);
  out.degree_ -= exponent;
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  const std::size_t n = std::min(a.factors_.size(), b.factors_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& [va, ea] = a.factors_[i];
    const auto& [vb, eb] = b.factors_[i];
    // An earlier variable ranks higher.
    if (va != vb) return va < vb ? std::strong_ordering::greater : std::strong_ordering::less;
    if (ea != eb) return ea <=> eb;
  }
  return a.factors_.size() <=> b.factors_.size();
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------- Polynomial

namespace {

bool term_before(const Term& a, const Term& b) { return a.mono > b.mono; }

}  // namespace

Polynomial Polynomial::constant(const Scalar& c) {
  if (sgn(c) == 0) return {};
  return Polynomial(std::vector<Term>{{Monomial{}, c}});
}

Polynomial Polynomial::variable(VarId v) {
  return Polynomial(std::vector<Term>{{Monomial::of(v), Scalar(1)}});
}

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& c) {
  if (sgn(c) == 0) return {};
  return Polynomial(std::vector<Term>{{m, c}});
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_before);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coef += t.coef;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return sgn(t.coef) == 0; });
  return Polynomial(std::move(out));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_constant()) return terms_.back().coef;
  return 0;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.front().mono.degree());
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.mono > key; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return 0;
}

std::set<VarId> Polynomial::variables() const {
  std::set<VarId> out;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) out.insert(f.first);
  return out;
}

bool Polynomial::is_integral() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coef.get_den() == 1; });
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Scalar c = t.coef;
    if (!first) {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    } else if (sgn(c) < 0 && !t.mono.is_constant() && c == -1) {
      os << '-';
      c = 1;
    }
    first = false;
    if (t.mono.is_constant()) {
      os << algproof::to_string(c);
    } else {
      if (c != 1) os << algproof::to_string(c) << '*';
      os << t.mono.to_string();
    }
  }
  return os.str();
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Term> out;
  out.reserve(p.terms_.size() + q.terms_.size());
  auto i = p.terms_.begin();
  auto j = q.terms_.begin();
  while (i != p.terms_.end() && j != q.terms_.end()) {
    const auto cmp = i->mono <=> j->mono;
    if (cmp > 0) {
      out.push_back(*i++);
    } else if (cmp < 0) {
      out.push_back(*j++);
    } else {
      Scalar c = i->coef + j->coef;
      if (sgn(c) != 0) out.push_back({i->mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, p.terms_.end());
  out.insert(out.end(), j, q.terms_.end());
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& p) { return scale(p, -1); }

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::map<Monomial, Scalar, std::greater<>> acc;
  for (const auto& a : p.terms_) {
    for (const auto& b : q.terms_) {
      Scalar c = a.coef * b.coef;
      auto [it, inserted] = acc.try_emplace(a.mono * b.mono, c);
      if (!inserted) it->second += c;
    }
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) out.push_back({m, std::move(c)});
  return Polynomial(std::move(out));
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial scale(const Polynomial& p, const Scalar& s) {
  if (sgn(s) == 0) return {};
  std::vector<Term> out = p.terms_;
  for (auto& t : out) t.coef *= s;
  return Polynomial(std::move(out));
}

Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial mul_monomial(const Polynomial& p, const Monomial& m, const Scalar& s) {
  if (sgn(s) == 0) return {};
  // Multiplying by a fixed monomial preserves the term order.
  std::vector<Term> out;
  out.reserve(p.terms_.size());
  for (const auto& t : p.terms_) out.push_back({t.mono * m, t.coef * s});
  return Polynomial(std::move(out));
}

Polynomial mul_var(const Polynomial& p, VarId v) { return mul_monomial(p, Monomial::of(v)); }

Polynomial power(const Polynomial& p, std::uint32_t e) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const Bindings& bindings) {
  if (bindings.empty()) return p;
  std::map<std::pair<VarId, std::uint32_t>, Polynomial> powers;
  auto power_of = [&](VarId v, const Polynomial& image, std::uint32_t e) -> const Polynomial& {
    auto [it, inserted] = powers.try_emplace({v, e});
    if (inserted) it->second = power(image, e);
    return it->second;
  };
  std::vector<Term> plain;
  Polynomial result;
  for (const auto& t : p.terms()) {
    std::vector<Monomial::Factor> kept;
    Polynomial factor;
    bool bound_any = false;
    for (const auto& [v, e] : t.mono.factors()) {
      auto it = bindings.find(v);
      if (it == bindings.end()) {
        kept.emplace_back(v, e);
        continue;
      }
      const Polynomial& pw = power_of(v, it->second, e);
      factor = bound_any ? factor * pw : pw;
      bound_any = true;
    }
    if (!bound_any) {
      plain.push_back(t);
      continue;
    }
    result = result + mul_monomial(factor, Monomial(std::move(kept)), t.coef);
  }
  return result + Polynomial::from_terms(std::move(plain));
}

Scalar evaluate(const Polynomial& p, const Assignment& a) {
  Scalar total = 0;
  for (const auto& t : p.terms()) {
    Scalar value = t.coef;
    for (const auto& [v, e] : t.mono.factors()) {
      auto it = a.find(v);
      if (it == a.end()) throw Error("UnboundVariable", "variable " + v.name() + " is not assigned");
      Scalar pw;
      mpz_pow_ui(pw.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(pw.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
      value *= pw;
    }
    total += value;
  }
  return total;
}

std::uint64_t literal_size(const Polynomial& p) {
  std::uint64_t bits = 0;
  for (const auto& t : p.terms()) bits += ceil_log2(t.coef.get_num()) + ceil_log2(t.coef.get_den());
  return bits;
}

std::uint64_t size_bit_length(const Polynomial& p) {
  std::uint64_t bits = 0;
  for (const auto& t : p.terms()) {
    bits += bit_length(t.coef.get_num());
    if (t.coef.get_den() != 1) bits += bit_length(t.coef.get_den());
  }
  return bits;
}

Integer denominator_product(const Polynomial& p) {
  Integer prod = 1;
  for (const auto& t : p.terms()) prod *= t.coef.get_den();
  return prod;
}

Integer denominator_lcm(const Polynomial& p) {
  Integer l = 1;
  for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  return l;
}

std::uint32_t max_degree_in(const Polynomial& p, VarId v) {
  std::uint32_t d = 0;
  for (const auto& t : p.terms()) d = std::max(d, t.mono.exponent(v));
  return d;
}

MultilinearReduction multilinear_reduce(const Polynomial& p, const std::set<VarId>& boolean_vars) {
  // Largest monomial first: each rewrite only produces strictly smaller
  // monomials, so every monomial is visited once with its merged coefficient.
  std::map<Monomial, Scalar, std::greater<>> pending;
  for (const auto& t : p.terms()) pending.emplace(t.mono, t.coef);

  MultilinearReduction out;
  std::vector<Term> reduced;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Monomial& m = node.key();
    Scalar& c = node.mapped();
    if (sgn(c) == 0) continue;
    const Monomial::Factor* target = nullptr;
    for (const auto& f : m.factors()) {
      if (f.second >= 2 && boolean_vars.count(f.first)) {
        target = &f;
        break;
      }
    }
    if (target == nullptr) {
      reduced.push_back({m, c});
      continue;
    }
    const VarId v = target->first;
    out.ledger.push_back({m.divided(v, 2), c, v});
    auto [it, inserted] = pending.try_emplace(m.divided(v, 1), c);
    if (!inserted) it->second += c;
  }
  out.reduced = Polynomial::from_terms(std::move(reduced));
  return out;
}

}  // namespace algproof
