#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "osculum/monomial.hpp"
#include "osculum/rational.hpp"

namespace osculum {

// Sparse multivariate polynomial over Q. Terms are kept sorted in
// graded-lex descending order with no zero coefficients.
class MPoly {
 public:
  struct Term {
    Monomial monomial;
    Rational coefficient;
  };

  MPoly() = default;
  explicit MPoly(std::size_t variable_count) : variable_count_(variable_count) {}

  static MPoly constant(std::size_t variable_count, const Rational& value);
  static MPoly variable(std::size_t variable_count, std::size_t index);
  static MPoly term(const Monomial& monomial, const Rational& coefficient = 1);
  // Sorts, merges duplicate monomials and drops zeros.
  static MPoly from_terms(std::size_t variable_count, std::vector<Term> terms);

  std::size_t variable_count() const noexcept { return variable_count_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // Value of a constant polynomial (0 for the zero polynomial).
  Rational constant_value() const;

  // -1 for the zero polynomial.
  int total_degree() const noexcept;
  // Largest exponent of variable i over all terms; -1 for the zero polynomial.
  int degree_in(std::size_t i) const noexcept;
  bool is_homogeneous() const noexcept;
  bool is_homogeneous(unsigned d) const noexcept;
  Rational coefficient(const Monomial& m) const;
  const Term& leading_term() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Rational& scalar);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }
  friend bool operator==(const MPoly& a, const MPoly& b);

  // Canonical rendering: graded-lex descending terms, "p/q" coefficients,
  // variables X0..Xn, e.g. "3*X0^2*X1 - 1/2*X2 + 1". Zero renders as "0".
  std::string to_string() const;

 private:
  static void check_compatible(const MPoly& a, const MPoly& b);

  std::size_t variable_count_ = 0;
  std::vector<Term> terms_;
};

MPoly add(const MPoly& a, const MPoly& b);
MPoly mul(const MPoly& a, const MPoly& b);
MPoly pow(const MPoly& base, unsigned exponent);
MPoly partial_derivative(const MPoly& f, std::size_t var_index);
// Iterated derivative; multi_index[i] is the order in variable i.
MPoly partial_derivative(const MPoly& f, const Monomial& multi_index);

Rational evaluate(const MPoly& f, std::span<const Rational> point);
// Composition f(images[0], ..., images[n-1]).
MPoly substitute(const MPoly& f, std::span<const MPoly> images);
// Fixes the variables listed in `indices` to `values`; the variable count is kept.
MPoly specialize(const MPoly& f, std::span<const std::size_t> indices,
                 std::span<const Rational> values);

// Embeds f into a ring with `variable_count` variables, variable i -> i + offset.
MPoly extend_variables(const MPoly& f, std::size_t variable_count,
                       std::size_t offset = 0);

// Exact quotient a / b; throws DegenerateInput when b does not divide a.
MPoly divide_exact(const MPoly& a, const MPoly& b);

// sum_i a[i] * b[i], with a single normalization pass.
MPoly dot(std::span<const MPoly> a, std::span<const MPoly> b);

// Coordinates of f in a monomial basis; throws when f has a term outside it.
std::vector<Rational> coefficient_vector(const MPoly& f,
                                         std::span<const Monomial> basis);

// Writes f in Q[Y][Z] where Y are the first `leading` variables and returns
// the coefficient (a polynomial in the remaining variables) of each basis
// monomial in Y.
std::vector<MPoly> coefficients_over(const MPoly& f, std::size_t leading,
                                     std::span<const Monomial> basis);

}  // namespace osculum
