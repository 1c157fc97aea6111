#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace algproof {

using Integer = mpz_class;
// mpq_class keeps values in lowest terms with a positive denominator after
// every arithmetic operation; zero is 0/1.
using Scalar = mpq_class;

bool is_integral(const Scalar& s);

// ceil(log2 |a|); |a| <= 1 contributes 0.
std::uint64_t ceil_log2(const Integer& a);

// Number of binary digits of |a| (0 for a = 0).
std::uint64_t bit_length(const Integer& a);

std::string to_string(const Integer& a);
// "<int>" or "<int>/<posint>".
std::string to_string(const Scalar& s);

// Accepts only the canonical spelling produced by to_string: no sign on zero,
// no leading zeros, no "/1", no unreduced fractions. Throws Error("ParseError").
Scalar parse_scalar(std::string_view text);
Integer parse_integer(std::string_view text);

Integer factorial(unsigned long n);

}  // namespace algproof
