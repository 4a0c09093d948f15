#include "osculum/linear_form.hpp"

#include <algorithm>

#include "osculum/errors.hpp"

namespace osculum {

LinearForm::LinearForm(MPoly form) : form_(std::move(form)) {
  if (form_.is_zero() || !form_.is_homogeneous(1))
    throw DegenerateInput("linear form must be nonzero and homogeneous of degree 1: " +
                          form_.to_string());
  coefficients_.resize(form_.variable_count());
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    coefficients_[i] = form_.coefficient(Monomial::variable(form_.variable_count(), i));
}

LinearForm::LinearForm(std::span<const Rational> coefficients)
    : coefficients_(coefficients.begin(), coefficients.end()) {
  const std::size_t n = coefficients.size();
  if (std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& c) { return c == 0; }))
    throw DegenerateInput("linear form must be nonzero");
  std::vector<MPoly::Term> terms;
  for (std::size_t i = 0; i < n; ++i)
    if (coefficients[i] != 0) terms.push_back({Monomial::variable(n, i), coefficients[i]});
  form_ = MPoly::from_terms(n, std::move(terms));
}

LinearForm LinearForm::from_integers(std::span<const long> coefficients) {
  const auto q = to_rationals(coefficients);
  return LinearForm(std::span<const Rational>(q));
}

std::vector<std::vector<Rational>> line_parametrization(const LinearForm& l) {
  const auto& c = l.coefficients();
  const std::size_t n = c.size();
  const std::size_t pivot = std::find_if(c.begin(), c.end(), [](const Rational& x) { return x != 0; }) - c.begin();
  std::vector<std::vector<Rational>> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == pivot) continue;
    std::vector<Rational> v(n, 0);
    v[j] = 1;
    v[pivot] = -c[j] / c[pivot];
    basis.push_back(std::move(v));
  }
  return basis;
}

MPoly restrict_mod_line(const MPoly& f, const LinearForm& l) {
  if (f.variable_count() != l.variable_count())
    throw DimensionMismatch("form and line live in different rings");
  if (!f.is_homogeneous()) throw DegenerateInput("restriction expects a homogeneous form");
  const auto basis = line_parametrization(l);
  const std::size_t n = l.variable_count();
  const std::size_t m = basis.size();
  std::vector<MPoly> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<MPoly::Term> terms;
    for (std::size_t j = 0; j < m; ++j)
      if (basis[j][i] != 0) terms.push_back({Monomial::variable(m, j), basis[j][i]});
    images.push_back(MPoly::from_terms(m, std::move(terms)));
  }
  return substitute(f, images);
}

}  // namespace osculum
