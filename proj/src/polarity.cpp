#include "osculum/polarity.hpp"

#include <algorithm>

#include "osculum/errors.hpp"

namespace osculum {

namespace {

bool proportional(const LinearForm& a, const LinearForm& b) {
  const auto& x = a.coefficients();
  const auto& y = b.coefficients();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] * y[j] != x[j] * y[i]) return false;
  return true;
}

}  // namespace

std::optional<std::vector<Rational>> rnc_polarity_check(std::span<const LinearForm> forms) {
  if (forms.empty()) throw DegenerateInput("polarity check needs at least one form");
  for (const auto& f : forms)
    if (f.variable_count() != 2) throw DimensionMismatch("polarity check expects binary linear forms");
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j)
      if (proportional(forms[i], forms[j])) throw DegenerateInput("polarity check got proportional forms");
  const auto d = static_cast<unsigned>(forms.size());
  const auto basis = monomials_of_degree(2, d);
  MPoly product = MPoly::constant(2, 1);
  std::vector<std::vector<Rational>> powers;
  for (const auto& f : forms) {
    product *= f.poly();
    powers.push_back(coefficient_vector(pow(f.poly(), d), basis));
  }
  const auto target = coefficient_vector(product, basis);
  return in_span(powers, target);
}

CubicSystem::CubicSystem(std::vector<MPoly> generators) : generators_(std::move(generators)) {
  if (generators_.size() != 4) throw DimensionMismatch("a cubic system has four generators");
  const auto basis = monomials_of_degree(3, 3);
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : generators_) {
    if (g.variable_count() != 3 || !g.is_homogeneous(3) || g.is_zero())
      throw DegenerateInput("generator " + g.to_string() + " is not a ternary cubic");
    rows.push_back(coefficient_vector(g, basis));
  }
  if (rank_exact(ExactMatrix::from_rows(rows)) != 4)
    throw DegenerateInput("cubic system generators are linearly dependent");
}

CubicSystem togliatti_system(const LinearForm& l0, const LinearForm& l1, const LinearForm& l2) {
  for (const auto* l : {&l0, &l1, &l2})
    if (l->variable_count() != 3) throw DimensionMismatch("togliatti system expects ternary forms");
  const auto m = ExactMatrix::from_rows({l0.coefficients(), l1.coefficients(), l2.coefficients()});
  if (scalar_determinant(m) == 0) throw DegenerateInput("togliatti system needs independent linear forms");
  return CubicSystem({pow(l0.poly(), 3), pow(l1.poly(), 3), pow(l2.poly(), 3),
                      l0.poly() * l1.poly() * l2.poly()});
}

LineTest line_dependency_test(std::span<const MPoly> forms) {
  if (forms.empty()) throw DegenerateInput("line test needs forms");
  const std::size_t count = forms.size();
  const unsigned d = static_cast<unsigned>(count - 1);
  for (const auto& f : forms)
    if (f.variable_count() != 3 || !f.is_homogeneous(d))
      throw DimensionMismatch("line test expects d+1 ternary forms of degree d");
  const auto basis = monomials_of_degree(2, d);
  // Ring (s, t, p, q): the line's points are parametrized by (s, t), its
  // two free coefficients are (p, q).
  const MPoly s = MPoly::variable(4, 0), t = MPoly::variable(4, 1);
  const MPoly p = MPoly::variable(4, 2), q = MPoly::variable(4, 3);
  LineTest out;
  out.holds = true;
  for (std::size_t chart = 0; chart < 3; ++chart) {
    std::vector<MPoly> images;
    const MPoly solved = -(p * s) - q * t;
    const std::array<MPoly, 2> free{s, t};
    for (std::size_t i = 0, f = 0; i < 3; ++i) images.push_back(i == chart ? solved : free[f++]);
    std::vector<MPoly> entries(count * count);
    for (std::size_t j = 0; j < count; ++j) {
      const auto coeffs = coefficients_over(substitute(forms[j], images), 2, basis);
      for (std::size_t i = 0; i < count; ++i) entries[i * count + j] = coeffs[i];
    }
    out.chart_determinants[chart] = determinant(ExactMatrix(count, count, std::move(entries)));
    if (out.chart_determinants[chart].variable_count() != 2)
      out.chart_determinants[chart] = extend_variables(out.chart_determinants[chart], 2);
    if (out.chart_determinants[chart].is_zero()) continue;
    out.holds = false;
    if (out.witness_line) continue;
    for (long radius = 0; !out.witness_line; ++radius)
      for (long x = -radius; x <= radius && !out.witness_line; ++x)
        for (long y = -radius; y <= radius && !out.witness_line; ++y) {
          if (std::max(std::abs(x), std::abs(y)) != radius) continue;
          const std::vector<Rational> pt{Rational(x), Rational(y)};
          if (evaluate(out.chart_determinants[chart], pt) == 0) continue;
          std::vector<Rational> line(3);
          for (std::size_t i = 0, f = 0; i < 3; ++i) line[i] = i == chart ? Rational(1) : pt[f++];
          out.witness_line = std::move(line);
        }
  }
  return out;
}

LineTest laplace_line_test(const CubicSystem& system) { return line_dependency_test(system.generators()); }

MTensor build_m_tensor(std::size_t n) {
  if (n < 1) throw DegenerateInput("m tensor needs n >= 1");
  if (n > 12) throw DegenerateInput("m tensor size too large");
  const std::vector<long> m{0, -1, 1, 0};
  const auto base = ExactMatrix::from_integers(2, 2, m);
  ExactMatrix out = base;
  for (std::size_t k = 1; k < n; ++k) out = kron(out, base);
  return {n, out};
}

namespace {

void check_tensor_length(std::size_t n, std::size_t length) {
  if (n < 1 || n > 12 || length != (std::size_t{1} << n))
    throw DimensionMismatch("tensor length must be 2^n");
}

// Entry (i, j) of m^{(x)n} is nonzero only for j = i xor (2^n - 1), with
// sign (-1)^{number of zero bits of i}.
int m_sign(std::size_t n, std::size_t i) {
  int zeros = 0;
  for (std::size_t k = 0; k < n; ++k) zeros += ((i >> k) & 1) == 0;
  return zeros % 2 ? -1 : 1;
}

}  // namespace

Rational segre_pairing(std::size_t n, std::span<const Rational> x) {
  check_tensor_length(n, x.size());
  const std::size_t all = x.size() - 1;
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += m_sign(n, i) * x[i] * x[i ^ all];
  return s;
}

MPoly segre_pairing(std::size_t n, std::span<const MPoly> x) {
  check_tensor_length(n, x.size());
  const std::size_t all = x.size() - 1;
  std::vector<MPoly> left;
  std::vector<MPoly> right;
  for (std::size_t i = 0; i < x.size(); ++i) {
    left.push_back(x[i] * Rational(m_sign(n, i)));
    right.push_back(x[i ^ all]);
  }
  return dot(left, right);
}

std::vector<Rational> segre_osc_form(std::span<const std::array<Rational, 2>> factor_points) {
  const std::size_t n = factor_points.size();
  if (n < 1 || n > 12) throw DegenerateInput("segre_osc_form needs 1..12 factors");
  for (const auto& f : factor_points)
    if (f[0] == 0 && f[1] == 0) throw DegenerateInput("segre_osc_form got a zero factor");
  std::vector<Rational> out(std::size_t{1} << n);
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    Rational v = 1;
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t bit = (idx >> (n - 1 - k)) & 1;
      v *= bit == 0 ? factor_points[k][1] : Rational(-factor_points[k][0]);
    }
    out[idx] = v;
  }
  return out;
}

std::vector<MPoly> segre_osc_form(std::span<const std::array<MPoly, 2>> factor_points) {
  const std::size_t n = factor_points.size();
  if (n < 1 || n > 12) throw DegenerateInput("segre_osc_form needs 1..12 factors");
  for (const auto& f : factor_points)
    if (f[0].is_zero() && f[1].is_zero()) throw DegenerateInput("segre_osc_form got a zero factor");
  std::vector<MPoly> out;
  out.reserve(std::size_t{1} << n);
  // Build the tensor factor by factor, most significant first.
  out.push_back(MPoly::constant(factor_points[0][0].variable_count(), 1));
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<MPoly> next;
    next.reserve(out.size() * 2);
    for (const auto& e : out) {
      next.push_back(e * factor_points[k][1]);
      next.push_back(-(e * factor_points[k][0]));
    }
    out = std::move(next);
  }
  return out;
}

SectionCommonPoint segre_section_common_point(std::size_t n, std::span<const Rational> a) {
  if (n < 3 || n % 2 == 0)
    throw DegenerateInput("the section common point needs an odd number of factors >= 3");
  check_tensor_length(n, a.size());
  auto section = hyperplane_section_param(n, a);
  const auto m = build_m_tensor(n);
  const auto image = m.matrix * ExactMatrix::from_columns({std::vector<Rational>(a.begin(), a.end())}, a.size());
  const ProjPoint c(image.column(0));

  SectionCommonPoint out{c, false, false, std::move(section), {}};
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * c.coords()[i];
  out.on_hyperplane = s == 0;

  const std::size_t vars = 2 * (n - 1);
  std::vector<std::array<MPoly, 2>> factors;
  factors.push_back({out.section.first_factor_x0, out.section.first_factor_x1});
  for (std::size_t k = 0; k + 1 < n; ++k)
    factors.push_back({MPoly::variable(vars, 2 * k), MPoly::variable(vars, 2 * k + 1)});
  out.generic_osculating_form = segre_osc_form(factors);
  std::vector<MPoly> cpoly;
  for (const auto& x : c.coords()) cpoly.push_back(MPoly::constant(vars, x));
  out.in_osculating_hyperplanes = dot(out.generic_osculating_form, cpoly).is_zero();
  return out;
}

}  // namespace osculum
