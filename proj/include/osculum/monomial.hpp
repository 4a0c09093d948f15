#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "osculum/rational.hpp"

namespace osculum {

// Exponent vector over a fixed number of variables X0..X(n-1).
// Ordering is graded-lexicographic with X0 > X1 > ...
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t variable_count);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t variable_count, std::size_t index,
                           unsigned power = 1);

  std::size_t variable_count() const noexcept { return exponents_.size(); }
  unsigned degree() const noexcept { return degree_; }
  unsigned operator[](std::size_t i) const { return exponents_[i]; }

  Monomial with_exponent(std::size_t i, unsigned e) const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b);

  // "X0^2*X1"; the empty product renders as "1".
  std::string to_string() const;

 private:
  boost::container::small_vector<Exponent, 8> exponents_;
  unsigned degree_ = 0;
};

// All monomials of total degree d in n variables, graded-lex descending.
std::vector<Monomial> monomials_of_degree(std::size_t variable_count, unsigned d);

// All monomials of total degree <= d, by increasing degree, each degree
// block graded-lex descending.
std::vector<Monomial> monomials_up_to_degree(std::size_t variable_count, unsigned d);

// Multinomial coefficient d! / prod(e_i!).
Integer multinomial(const Monomial& m);

}  // namespace osculum
