#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "osculum/linalg.hpp"
#include "osculum/linear_form.hpp"
#include "osculum/varieties.hpp"

namespace osculum {

// Coefficients expressing the product of the forms as a combination of
// their d-th powers, where d is the number of forms.
std::optional<std::vector<Rational>> rnc_polarity_check(std::span<const LinearForm> forms);

class CubicSystem {
 public:
  explicit CubicSystem(std::vector<MPoly> generators);
  const std::vector<MPoly>& generators() const noexcept { return generators_; }

 private:
  std::vector<MPoly> generators_;
};

CubicSystem togliatti_system(const LinearForm& l0, const LinearForm& l1, const LinearForm& l2);

struct LineTest {
  bool holds = false;
  std::array<MPoly, 3> chart_determinants;  // charts a=1, b=1, c=1
  std::optional<std::vector<Rational>> witness_line;
};

// Restricts the forms (d+1 homogeneous forms of degree d in three
// variables) to the symbolic line aX0 + bX1 + cX2 = 0 and asks whether the
// restrictions are dependent for every line.
LineTest line_dependency_test(std::span<const MPoly> forms);
LineTest laplace_line_test(const CubicSystem& system);

struct MTensor {
  std::size_t n = 0;
  ExactMatrix matrix;
};

MTensor build_m_tensor(std::size_t n);

Rational segre_pairing(std::size_t n, std::span<const Rational> x);
MPoly segre_pairing(std::size_t n, std::span<const MPoly> x);

// Coefficient tensor of prod_k (x_{k,1} X_{k,0} - x_{k,0} X_{k,1}).
std::vector<Rational> segre_osc_form(std::span<const std::array<Rational, 2>> factor_points);
std::vector<MPoly> segre_osc_form(std::span<const std::array<MPoly, 2>> factor_points);

struct SectionCommonPoint {
  ProjPoint candidate;         // in the Segre ambient space
  bool on_hyperplane = false;  // <a, c> = 0
  bool in_osculating_hyperplanes = false;  // <osc form at x(t), c> vanishes identically
  HyperplaneSection section;
  std::vector<MPoly> generic_osculating_form;  // osc form along the chart, ambient coordinates
};

SectionCommonPoint segre_section_common_point(std::size_t n, std::span<const Rational> a);

}  // namespace osculum
