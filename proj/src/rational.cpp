#include "osculum/rational.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

#include "osculum/errors.hpp"

namespace osculum {

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DegenerateInput("rational with zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  Rational q;
  if (q.set_str(s, 10) != 0) throw DegenerateInput("cannot parse rational '" + s + "'");
  if (q.get_den() == 0) throw DegenerateInput("rational with zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(std::span<const Rational> values) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ", ";
    out << values[i].get_str();
  }
  out << ')';
  return out.str();
}

std::vector<Rational> to_rationals(std::span<const long> values) {
  return {values.begin(), values.end()};
}

std::vector<Integer> primitive_integer_vector(std::span<const Rational> values) {
  Integer lcm = 1;
  for (const auto& v : values) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(values.size());
  Integer g = 0;
  for (const auto& v : values) {
    Integer n = v.get_num() * (lcm / v.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    out.push_back(std::move(n));
  }
  if (g == 0) throw DegenerateInput("zero vector has no primitive representative");
  const auto first = std::find_if(out.begin(), out.end(), [](const Integer& x) { return x != 0; });
  if (*first < 0) g = -g;
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

}  // namespace osculum
