#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hypercone {

using Rational = mpq_class;

/// Accepts "7", "-3/4" and finite decimals such as "1.25" or "-0.5"; the
/// result is exact and canonicalized.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

bool is_integer(const Rational& value);

/// Least common multiple of the denominators; 1 for an empty range.
template <class Range>
mpz_class common_denominator(const Range& values) {
  mpz_class lcm = 1;
  for (const Rational& v : values) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  return lcm;
}

}  // namespace hypercone
