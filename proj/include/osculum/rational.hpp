#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace osculum {

using Integer = mpz_class;
// Canonical form (gcd 1, positive denominator) is maintained by GMP.
using Rational = mpq_class;

Rational make_rational(const Integer& numerator, const Integer& denominator);
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(std::span<const Rational> values);

std::vector<Rational> to_rationals(std::span<const long> values);

// Scales a nonzero vector to coprime integers whose first nonzero entry is positive.
std::vector<Integer> primitive_integer_vector(std::span<const Rational> values);

}  // namespace osculum
