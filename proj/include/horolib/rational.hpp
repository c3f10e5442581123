#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace horolib {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms. Throws InvalidInput on den == 0.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

// "p/q" in lowest terms, sign carried by p, q always printed.
std::string to_string(const Rational& q);

// Accepts "p/q", "p" and surrounding whitespace.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

// Exact q^e for integer e (negative allowed when q != 0).
Rational pow(const Rational& q, long e);

}  // namespace horolib
