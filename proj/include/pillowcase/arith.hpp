#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pillowcase/errors.hpp"

namespace pillowcase {

using Int = mpz_class;
using Rational = mpq_class;

Int factorial(unsigned long n);
Int binomial(const Int& n, unsigned long k);

// n(n-1)...(n-k+1); empty product for k = 0.
Int falling_factorial(const Int& n, unsigned long k);

// 2^e as an exact rational, e may be negative.
Rational pow2(long e);

std::string to_string(const Rational& r);
std::string to_string(const Int& n);

// Strict parser for "p" or "p/q" with optional leading '-'; rejects anything
// mpq would silently misread (empty strings, whitespace, q = 0).
Rational parse_rational(std::string_view s);

// Bernoulli numbers with B_1 = -1/2, computed by the defining recurrence and
// cached.  zeta_neg(k) = zeta(-k) = -B_{k+1}/(k+1).
Rational bernoulli(unsigned k);
Rational zeta_neg(unsigned k);

// FNV-1a, used for cache directory names derived from observable strings.
std::uint64_t fnv1a64(std::string_view s);
std::string fnv1a64_hex(std::string_view s);

} // namespace pillowcase
