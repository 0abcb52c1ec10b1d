#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace halphen {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise (q > 0, lowest terms).
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);

/// Binomial coefficient with the counting convention C(a, b) = 0 whenever
/// b < 0 or a < b. Every count of monomials in the library goes through here.
Integer binomial(std::int64_t top, std::int64_t bottom);

/// Converts to int64, throwing std::overflow_error when out of range.
std::int64_t to_int64(const Integer& value);

}  // namespace halphen
