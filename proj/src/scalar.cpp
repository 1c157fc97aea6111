#include "algproof/scalar.hpp"

#include "algproof/error.hpp"

namespace algproof {

bool is_integral(const Scalar& s) { return s.get_den() == 1; }

std::uint64_t bit_length(const Integer& a) {
  if (sgn(a) == 0) return 0;
  return mpz_sizeinbase(a.get_mpz_t(), 2);
}

std::uint64_t ceil_log2(const Integer& a) {
  Integer m = abs(a);
  if (m <= 1) return 0;
  const std::uint64_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
  const bool power_of_two = mpz_scan1(m.get_mpz_t(), 0) == bits - 1;
  return power_of_two ? bits - 1 : bits;
}

std::string to_string(const Integer& a) { return a.get_str(10); }

std::string to_string(const Scalar& s) {
  if (s.get_den() == 1) return s.get_num().get_str(10);
  return s.get_num().get_str(10) + "/" + s.get_den().get_str(10);
}

namespace {

bool plain_digits(std::string_view t) {
  if (t.empty()) return false;
  for (char c : t)
    if (c < '0' || c > '9') return false;
  return true;
}

bool signed_digits(std::string_view t) {
  if (!t.empty() && t.front() == '-') t.remove_prefix(1);
  return plain_digits(t);
}

}  // namespace

Integer parse_integer(std::string_view text) {
  if (!signed_digits(text))
    throw Error("ParseError", "not an integer: '" + std::string(text) + "'");
  Integer v(std::string(text), 10);
  if (v.get_str(10) != text)
    throw Error("ParseError", "non-canonical integer: '" + std::string(text) + "'");
  return v;
}

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  Scalar s;
  if (slash == std::string_view::npos) {
    s = Scalar(parse_integer(text));
  } else {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!signed_digits(num) || !plain_digits(den))
      throw Error("ParseError", "not a rational: '" + std::string(text) + "'");
    Integer d(std::string(den), 10);
    if (d == 0) throw Error("ParseError", "zero denominator: '" + std::string(text) + "'");
    s = Scalar(Integer(std::string(num), 10), d);
    s.canonicalize();
  }
  if (to_string(s) != text)
    throw Error("ParseError", "non-canonical rational: '" + std::string(text) + "'");
  return s;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace algproof
