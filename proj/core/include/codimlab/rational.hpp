#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace codimlab {

// Exact arithmetic over Q. All values are kept canonical: gcd(num, den) = 1,
// den > 0, zero is 0/1. GMP keeps arithmetic results canonical as long as the
// operands are, so construction is the only place that needs care; parsing and
// the (num, den) factory below canonicalize explicitly.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

Rational make_rational(long long num, long long den = 1);

// Accepts "p", "-p", "p/q" with optional sign on p; q must be nonzero.
// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

// Canonical text: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string rational_text(const Rational& value);

}  // namespace codimlab
