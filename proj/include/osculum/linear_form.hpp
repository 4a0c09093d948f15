#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "osculum/mpoly.hpp"

namespace osculum {

// Nonzero homogeneous polynomial of degree exactly 1.
class LinearForm {
 public:
  explicit LinearForm(MPoly form);
  explicit LinearForm(std::span<const Rational> coefficients);
  static LinearForm from_integers(std::span<const long> coefficients);

  const MPoly& poly() const noexcept { return form_; }
  std::size_t variable_count() const noexcept { return form_.variable_count(); }
  const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }

  friend bool operator==(const LinearForm& a, const LinearForm& b) {
    return a.coefficients_ == b.coefficients_;
  }

 private:
  MPoly form_;
  std::vector<Rational> coefficients_;
};

// The two reduced-echelon kernel vectors of the coefficient row of l, in
// order of increasing free column. For n variables there are n-1 of them.
std::vector<std::vector<Rational>> line_parametrization(const LinearForm& l);

// Pulls f back along the line {l = 0}: X = sum_j T_j * v_j with v_j the
// kernel vectors above. The result lives in variable_count - 1 variables.
MPoly restrict_mod_line(const MPoly& f, const LinearForm& l);

}  // namespace osculum
