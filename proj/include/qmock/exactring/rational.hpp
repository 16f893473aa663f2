#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace qmock::exactring {

// Arbitrary-precision rational in canonical form (gcd 1, positive
// denominator). gmpxx keeps every arithmetic result canonical; values built
// from strings go through parse_rational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p", "-p" or "p/q". Throws PreconditionError on malformed input or
// a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

// Exact conversion; throws DomainError when r is not an integer or does not
// fit in 64 bits.
std::int64_t to_int64(const Rational& r);

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

}  // namespace qmock::exactring
