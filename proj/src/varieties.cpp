#include "osculum/varieties.hpp"

#include <algorithm>
#include <numeric>

#include "osculum/errors.hpp"
#include "osculum/linalg.hpp"

namespace osculum {

std::size_t SourceShape::variable_count() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.size();
  return n;
}

std::size_t SourceShape::parameter_count() const { return variable_count() - groups.size(); }

SourceShape SourceShape::projective(std::size_t m, unsigned degree) {
  SourceShape s{SourceKind::Projective, {std::vector<std::size_t>(m + 1)}, {degree}};
  std::iota(s.groups[0].begin(), s.groups[0].end(), 0);
  return s;
}

SourceShape SourceShape::multiprojective(std::size_t factors, unsigned degree_per_factor) {
  SourceShape s{SourceKind::Multiprojective, {}, {}};
  for (std::size_t k = 0; k < factors; ++k) {
    s.groups.push_back({2 * k, 2 * k + 1});
    s.degrees.push_back(degree_per_factor);
  }
  return s;
}

ParamVariety::ParamVariety(std::string name, SourceShape shape, std::vector<MPoly> coordinates)
    : name_(std::move(name)), shape_(std::move(shape)), coords_(std::move(coordinates)) {
  if (coords_.empty()) throw DegenerateInput("variety needs at least one coordinate");
  if (shape_.groups.size() != shape_.degrees.size() || shape_.groups.empty())
    throw DimensionMismatch("source shape groups and degrees disagree");
  const std::size_t n = shape_.variable_count();
  std::vector<bool> seen(n, false);
  for (const auto& g : shape_.groups)
    for (auto v : g) {
      if (v >= n || seen[v]) throw DimensionMismatch("source groups must partition the variables");
      seen[v] = true;
    }
  bool any_nonzero = false;
  for (const auto& c : coords_) {
    if (c.variable_count() != n) throw DimensionMismatch("coordinate ring does not match the source");
    any_nonzero = any_nonzero || !c.is_zero();
    for (const auto& t : c.terms())
      for (std::size_t g = 0; g < shape_.groups.size(); ++g) {
        unsigned d = 0;
        for (auto v : shape_.groups[g]) d += t.monomial[v];
        if (d != shape_.degrees[g])
          throw DegenerateInput("coordinate " + c.to_string() + " is not homogeneous of the source degree");
      }
  }
  if (!any_nonzero) throw DegenerateInput("all coordinates vanish identically");
}

unsigned ParamVariety::degree() const {
  return std::accumulate(shape_.degrees.begin(), shape_.degrees.end(), 0u);
}

void ParamVariety::check_point(std::span<const Rational> point) const {
  if (point.size() != variable_count()) throw DimensionMismatch("parameter point has the wrong length");
  for (const auto& g : shape_.groups)
    if (std::all_of(g.begin(), g.end(), [&](std::size_t v) { return point[v] == 0; }))
      throw DegenerateInput("parameter point has a zero factor block");
}

std::vector<Rational> ParamVariety::evaluate(std::span<const Rational> point) const {
  check_point(point);
  std::vector<Rational> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.push_back(osculum::evaluate(c, point));
  return out;
}

ProjPoint::ProjPoint(std::span<const Rational> coords) {
  for (const auto& z : primitive_integer_vector(coords)) coords_.emplace_back(z);
}

ProjPoint ProjPoint::from_integers(std::span<const long> coords) {
  const auto q = to_rationals(coords);
  return ProjPoint(q);
}

ProjPoint ProjPoint::unit(std::size_t length, std::size_t index) {
  std::vector<Rational> v(length, 0);
  v.at(index) = 1;
  return ProjPoint(v);
}

std::string ProjPoint::to_string() const { return osculum::to_string(std::span<const Rational>(coords_)); }

ParamVariety veronese(std::size_t m, unsigned d) {
  if (m < 1 || d < 1) throw DegenerateInput("veronese needs m >= 1 and d >= 1");
  std::vector<MPoly> coords;
  for (const auto& mono : monomials_of_degree(m + 1, d)) coords.push_back(MPoly::term(mono));
  return ParamVariety("veronese(" + std::to_string(m) + "," + std::to_string(d) + ")",
                      SourceShape::projective(m, d), std::move(coords));
}

ParamVariety apolar_veronese(std::size_t m, unsigned d) {
  if (m < 1 || d < 1) throw DegenerateInput("veronese needs m >= 1 and d >= 1");
  std::vector<MPoly> coords;
  for (const auto& mono : monomials_of_degree(m + 1, d))
    coords.push_back(MPoly::term(mono, Rational(multinomial(mono))));
  return ParamVariety("apolar-veronese(" + std::to_string(m) + "," + std::to_string(d) + ")",
                      SourceShape::projective(m, d), std::move(coords));
}

ParamVariety rnc(unsigned d) {
  auto v = veronese(1, d);
  return ParamVariety("rnc(" + std::to_string(d) + ")", v.shape(), v.coordinates());
}

ParamVariety segre(std::size_t n) {
  if (n < 1) throw DegenerateInput("segre needs n >= 1");
  if (n > 16) throw DegenerateInput("segre factor count too large");
  const std::size_t vars = 2 * n;
  std::vector<MPoly> coords;
  for (std::size_t idx = 0; idx < (std::size_t{1} << n); ++idx) {
    Monomial mono(vars);
    for (std::size_t k = 0; k < n; ++k) {
      const std::size_t bit = (idx >> (n - 1 - k)) & 1;
      mono = mono * Monomial::variable(vars, 2 * k + bit);
    }
    coords.push_back(MPoly::term(mono));
  }
  return ParamVariety("segre(" + std::to_string(n) + ")", SourceShape::multiprojective(n, 1),
                      std::move(coords));
}

ProjPoint power_point(const LinearForm& l, unsigned d) {
  const auto basis = monomials_of_degree(l.variable_count(), d);
  const auto v = coefficient_vector(pow(l.poly(), d), basis);
  return ProjPoint(v);
}

ParamVariety linear_projection(const ParamVariety& v, std::span<const ProjPoint> center) {
  const std::size_t n = v.coordinates().size();
  if (center.empty()) return v;
  if (center.size() >= n) throw DegenerateInput("projection center is as large as the ambient space");
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : center) {
    if (p.size() != n) throw DimensionMismatch("center point lives in another ambient space");
    rows.push_back(p.coords());
  }
  const auto c = ExactMatrix::from_rows(rows);
  if (rank_exact(c) != center.size()) throw DegenerateInput("projection center points are dependent");
  const auto functionals = kernel_basis(c);
  std::vector<MPoly> coords;
  for (const auto& phi : functionals.vectors) {
    MPoly f(v.variable_count());
    for (std::size_t i = 0; i < n; ++i)
      if (phi[i] != 0) f += v.coordinates()[i] * phi[i];
    coords.push_back(std::move(f));
  }
  if (std::all_of(coords.begin(), coords.end(), [](const MPoly& f) { return f.is_zero(); }))
    throw DegenerateInput("projection kills every coordinate");
  return ParamVariety(v.name() + "/" + std::to_string(center.size()), v.shape(), std::move(coords));
}

std::vector<Rational> HyperplaneSection::lift(std::span<const Rational> y) const {
  if (y.size() != basis.size()) throw DimensionMismatch("hyperplane coordinates have the wrong length");
  std::vector<Rational> x(hyperplane.size(), 0);
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[j] * basis[j][i];
  return x;
}

std::vector<Rational> HyperplaneSection::restrict_point(std::span<const Rational> x) const {
  if (x.size() != hyperplane.size()) throw DimensionMismatch("ambient point has the wrong length");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += hyperplane[i] * x[i];
  if (s != 0) throw DegenerateInput("point does not lie on the hyperplane");
  std::vector<Rational> y;
  for (auto p : pivots) y.push_back(x[p]);
  return y;
}

std::vector<Rational> HyperplaneSection::restrict_functional(std::span<const Rational> phi) const {
  if (phi.size() != hyperplane.size()) throw DimensionMismatch("functional has the wrong length");
  std::vector<Rational> out;
  for (const auto& b : basis) {
    Rational s = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] != 0) s += phi[i] * b[i];
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<MPoly> HyperplaneSection::restrict_functional(std::span<const MPoly> phi) const {
  if (phi.size() != hyperplane.size()) throw DimensionMismatch("functional has the wrong length");
  std::vector<MPoly> out;
  for (const auto& b : basis) {
    MPoly s(phi.empty() ? 0 : phi[0].variable_count());
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] != 0) s += phi[i] * b[i];
    out.push_back(std::move(s));
  }
  return out;
}

HyperplaneSection hyperplane_section_param(std::size_t n, std::span<const Rational> a) {
  if (n < 2) throw DegenerateInput("hyperplane sections need at least two factors");
  const std::size_t size = std::size_t{1} << n;
  if (a.size() != size) throw DimensionMismatch("hyperplane vector must have 2^n entries");
  const std::size_t half = size / 2;
  const std::size_t vars = 2 * (n - 1);
  // Segre monomials of factors 2..n, in binary-counter order.
  const auto rest = segre(n - 1);
  std::vector<MPoly> tail;
  for (const auto& c : rest.coordinates()) tail.push_back(c);
  MPoly A(vars), B(vars);
  for (std::size_t r = 0; r < half; ++r) {
    if (a[r] != 0) A += tail[r] * a[r];
    if (a[half + r] != 0) B += tail[r] * a[half + r];
  }
  if (A.is_zero() || B.is_zero())
    throw DegenerateInput("hyperplane is inadmissible: one first-factor block vanishes identically");
  const MPoly x0 = -B, x1 = A;
  std::vector<MPoly> ambient;
  for (std::size_t r = 0; r < half; ++r) ambient.push_back(x0 * tail[r]);
  for (std::size_t r = 0; r < half; ++r) ambient.push_back(x1 * tail[r]);

  const auto kb = kernel_basis(ExactMatrix(1, size, std::vector<Rational>(a.begin(), a.end())));
  std::vector<MPoly> inside;
  for (auto p : kb.pivots) inside.push_back(ambient[p]);
  ParamVariety v("segre(" + std::to_string(n) + ")-section", SourceShape::multiprojective(n - 1, 2),
                 std::move(inside));
  return HyperplaneSection{std::move(v), std::move(ambient), std::vector<Rational>(a.begin(), a.end()),
                           x0, x1, kb.vectors, kb.pivots};
}

}  // namespace osculum
